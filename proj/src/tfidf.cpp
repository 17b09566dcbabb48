#include "kexkit/tfidf.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace kexkit {

double IdfTable::value(const std::string& stem) const {
    auto it = idf.find(stem);
    if (it != idf.end()) return it->second;
    return std::log(static_cast<double>(doc_count)) + 1.0; // df = 0
}

IdfTable compute_idf(const Dataset& ds) {
    if (ds.empty()) throw std::runtime_error("empty_corpus");
    IdfTable table;
    table.doc_count = static_cast<int>(ds.size());
    std::unordered_map<std::string, int> df;
    for (const BibRecord& rec : ds.records()) {
        TaggedDocument doc = tokenize(rec.abstract, rec.id);
        std::set<std::string> stems;
        for (const Token& tok : doc.tokens) stems.insert(tok.stem);
        for (const std::string& stem : stems) df[stem]++;
    }
    const double n = static_cast<double>(table.doc_count);
    for (const auto& [stem, count] : df)
        table.idf.emplace(stem, std::log(n / (1.0 + count)) + 1.0);
    return table;
}

ExtractResult tfidf_extract(const TaggedDocument& doc, const IdfTable& idf,
                            const ExtractOptions& options) {
    const StopwordSet& stopwords = options.stopword_set();
    auto candidates = select_candidates(doc, options.max_phrase_len, stopwords);
    std::unordered_map<std::string, int> tf;
    for (const Token& tok : doc.tokens) tf[tok.stem]++;
    std::vector<double> scores;
    scores.reserve(candidates.size());
    for (const CandidatePhrase& phrase : candidates) {
        double total = 0.0;
        std::set<std::string> seen;
        for (const std::string& stem : phrase.stems) {
            if (!seen.insert(stem).second) continue;
            auto it = tf.find(stem);
            if (it == tf.end()) continue;
            total += static_cast<double>(it->second) * idf.value(stem);
        }
        scores.push_back(total);
    }
    return rank_candidates(candidates, scores, options.rank.top_n);
}

} // namespace kexkit
