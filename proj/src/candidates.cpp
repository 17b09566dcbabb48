#include "kexkit/candidates.hpp"

#include <cctype>
#include <map>

namespace kexkit {
namespace {

std::string lower_ascii(const std::string& s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool is_nounish(PosTag tag) { return tag == PosTag::Noun || tag == PosTag::Propn; }

} // namespace

bool qualifies(const Token& tok, const StopwordSet& stopwords) {
    if (tok.pos != PosTag::Adj && !is_nounish(tok.pos)) return false;
    return stopwords.find(lower_ascii(tok.surface)) == stopwords.end();
}

std::vector<CandidatePhrase> select_candidates(const TaggedDocument& doc,
                                               int max_phrase_len,
                                               const StopwordSet& stopwords) {
    if (max_phrase_len < 1) max_phrase_len = 1;
    std::vector<CandidatePhrase> out;
    std::map<std::vector<std::string>, size_t> by_stems;

    auto add_occurrence = [&](size_t begin, size_t end) {
        std::vector<std::string> stems;
        stems.reserve(end - begin);
        for (size_t t = begin; t < end; t++) stems.push_back(doc.tokens[t].stem);
        auto it = by_stems.find(stems);
        if (it == by_stems.end()) {
            CandidatePhrase phrase;
            phrase.stems = stems;
            for (size_t t = begin; t < end; t++)
                phrase.surfaces.push_back(doc.tokens[t].surface);
            out.push_back(std::move(phrase));
            it = by_stems.emplace(std::move(stems), out.size() - 1).first;
        }
        std::vector<int> positions;
        positions.reserve(end - begin);
        for (size_t t = begin; t < end; t++) positions.push_back(doc.tokens[t].doc_position);
        out[it->second].occurrences.push_back(std::move(positions));
    };

    const auto& toks = doc.tokens;
    size_t i = 0;
    while (i < toks.size()) {
        if (!qualifies(toks[i], stopwords)) {
            i++;
            continue;
        }
        // maximal run of qualifying tokens at consecutive positions in one sentence
        size_t run_end = i + 1;
        while (run_end < toks.size() && qualifies(toks[run_end], stopwords) &&
               toks[run_end].sent_index == toks[i].sent_index &&
               toks[run_end].doc_position == toks[run_end - 1].doc_position + 1)
            run_end++;

        size_t p = i;
        while (p < run_end) {
            add_occurrence(p, p + 1); // every qualifying word stands alone too
            size_t q = p;
            if (toks[p].pos == PosTag::Adj) {
                while (q < run_end && toks[q].pos == PosTag::Adj) {
                    if (q > p) add_occurrence(q, q + 1);
                    q++;
                }
                if (q == run_end || !is_nounish(toks[q].pos)) {
                    p = q;
                    continue;
                }
            }
            while (q < run_end && is_nounish(toks[q].pos)) {
                if (q > p) add_occurrence(q, q + 1);
                q++;
            }
            size_t len = q - p;
            if (len > 1) {
                size_t begin = p;
                if (len > static_cast<size_t>(max_phrase_len))
                    begin = q - static_cast<size_t>(max_phrase_len);
                if (q - begin > 1) add_occurrence(begin, q);
            }
            p = q;
        }
        i = run_end;
    }
    return out;
}

std::string normalize_phrase_key(std::string_view phrase) {
    TaggedDocument doc = tokenize(phrase);
    std::string key;
    for (const Token& tok : doc.tokens) {
        if (!key.empty()) key.push_back(' ');
        key += tok.stem;
    }
    return key;
}

std::string phrase_key(const CandidatePhrase& phrase) {
    std::string key;
    for (const std::string& stem : phrase.stems) {
        if (!key.empty()) key.push_back(' ');
        key += stem;
    }
    return key;
}

} // namespace kexkit
