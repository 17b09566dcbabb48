#include "kexkit/bibrank.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace kexkit {
namespace {

const std::set<std::string>& supported_attributes() {
    static const std::set<std::string> attrs = {"year", "topic", "journal",
                                                "source_file"};
    return attrs;
}

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) a++;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) b--;
    return std::string(s.substr(a, b - a));
}

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    long value = 0;
    for (; i < s.size(); i++) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        value = value * 10 + (s[i] - '0');
        if (value > 1000000000L) return false;
    }
    out = static_cast<int>(s[0] == '-' ? -value : value);
    return true;
}

} // namespace

ContextSpec parse_context_spec(std::string_view text) {
    ContextSpec spec;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string clause_text = trim(text.substr(start, end - start));
        bool last = end == text.size();
        start = end + 1;
        if (clause_text.empty()) {
            if (last) break;
            continue;
        }
        size_t eq = clause_text.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("context clause '" + clause_text +
                                        "' is not attr=value");
        ContextClause clause;
        clause.attribute = trim(std::string_view(clause_text).substr(0, eq));
        std::string value = trim(std::string_view(clause_text).substr(eq + 1));
        if (!supported_attributes().count(clause.attribute))
            throw std::invalid_argument("unknown context attribute '" +
                                        clause.attribute + "'");
        if (size_t dots = value.find(".."); dots != std::string::npos) {
            if (clause.attribute != "year")
                throw std::invalid_argument("range clause only supported for year");
            clause.kind = ContextClause::Kind::Range;
            if (!parse_int(trim(std::string_view(value).substr(0, dots)), clause.lo) ||
                !parse_int(trim(std::string_view(value).substr(dots + 2)), clause.hi))
                throw std::invalid_argument("malformed year range '" + value + "'");
        } else if (value.find('|') != std::string::npos) {
            clause.kind = ContextClause::Kind::InSet;
            size_t vstart = 0;
            while (vstart <= value.size()) {
                size_t vend = value.find('|', vstart);
                if (vend == std::string::npos) vend = value.size();
                std::string v = trim(std::string_view(value).substr(vstart, vend - vstart));
                if (!v.empty()) clause.values.push_back(std::move(v));
                if (vend == value.size()) break;
                vstart = vend + 1;
            }
            if (clause.values.empty())
                throw std::invalid_argument("empty value set in clause '" +
                                            clause_text + "'");
        } else {
            if (value.empty())
                throw std::invalid_argument("empty value in clause '" + clause_text + "'");
            clause.kind = ContextClause::Kind::Equals;
            clause.values.push_back(std::move(value));
        }
        spec.clauses.push_back(std::move(clause));
        if (last) break;
    }
    return spec;
}

std::vector<const BibRecord*> select_context(const Dataset& ds,
                                             const ContextSpec& spec) {
    std::set<std::string> ids;
    bool first = true;
    for (const ContextClause& clause : spec.clauses) {
        std::set<std::string> matched;
        auto add = [&](const std::string& value) {
            if (const auto* set = ds.index_ids(clause.attribute, value))
                matched.insert(set->begin(), set->end());
        };
        switch (clause.kind) {
        case ContextClause::Kind::Equals:
        case ContextClause::Kind::InSet:
            for (const std::string& v : clause.values) add(v);
            break;
        case ContextClause::Kind::Range:
            for (int y = clause.lo; y <= clause.hi; y++) add(std::to_string(y));
            break;
        }
        if (first) {
            ids = std::move(matched);
            first = false;
        } else {
            std::set<std::string> both;
            std::set_intersection(ids.begin(), ids.end(), matched.begin(),
                                  matched.end(), std::inserter(both, both.begin()));
            ids = std::move(both);
        }
        if (ids.empty()) break;
    }

    std::vector<const BibRecord*> out;
    if (spec.clauses.empty()) {
        std::set<std::string> all;
        for (const BibRecord& rec : ds.records()) all.insert(rec.id);
        for (const std::string& id : all) out.push_back(ds.find(id));
        return out;
    }
    out.reserve(ids.size());
    for (const std::string& id : ids) out.push_back(ds.find(id));
    return out;
}

BibWeightTable compute_bib_weights(const std::vector<const BibRecord*>& context) {
    BibWeightTable table;
    table.context_size = static_cast<int>(context.size());
    std::unordered_map<std::string, double> raw;
    for (const BibRecord* rec : context) {
        std::set<std::string> in_record; // per-record binary indicator
        for (const std::string& phrase : rec->keyphrases) {
            std::string key = normalize_phrase_key(phrase);
            if (key.empty()) continue;
            if (in_record.insert(key).second) raw[key] += 1.0;
        }
    }
    double max_raw = 0.0;
    for (const auto& [key, count] : raw) max_raw = std::max(max_raw, count);
    if (max_raw <= 0.0) return table;
    table.bib_norm = max_raw;
    for (const auto& [key, count] : raw) table.lambda.emplace(key, count / max_raw);
    return table;
}

ExtractResult bibrank_extract(const TaggedDocument& doc, const BibWeightTable& weights,
                              const ExtractOptions& options) {
    const StopwordSet& stopwords = options.stopword_set();
    auto candidates = select_candidates(doc, options.max_phrase_len, stopwords);
    WordGraph graph = build_graph(doc, options.rank.window, stopwords);
    BiasVector bias = position_bias(doc, stopwords);
    ScoreVector scores = pagerank(graph, bias, options.rank);
    int missing = 0;
    std::vector<double> phrase_scores = score_phrases(candidates, scores, &missing);
    if (!weights.empty()) {
        for (size_t i = 0; i < candidates.size(); i++) {
            auto it = weights.lambda.find(phrase_key(candidates[i]));
            if (it != weights.lambda.end()) phrase_scores[i] += it->second;
        }
    }
    ExtractResult result = rank_candidates(candidates, phrase_scores, options.rank.top_n);
    result.iterations = scores.iterations;
    result.converged = scores.converged;
    result.missing_stems = missing;
    return result;
}

} // namespace kexkit
