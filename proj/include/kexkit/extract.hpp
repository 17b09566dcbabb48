#ifndef KEXKIT_EXTRACT_HPP_
#define KEXKIT_EXTRACT_HPP_

#include <string>
#include <vector>

#include "kexkit/graph.hpp"

namespace kexkit {

struct ExtractOptions {
    RankParams rank;
    int max_phrase_len = 3;
    const StopwordSet* stopwords = nullptr; // null -> default_stopwords()

    const StopwordSet& stopword_set() const {
        return stopwords ? *stopwords : default_stopwords();
    }
};

struct ScoredPhrase {
    std::string text; // first-occurrence surfaces joined with spaces
    std::vector<std::string> stems;
    double score = 0.0;
};

struct ExtractResult {
    std::vector<ScoredPhrase> phrases; // descending score, at most top_n
    int iterations = 0;
    bool converged = true;
    int missing_stems = 0;
};

/// Sorts candidates by descending score, ties broken lexicographically by
/// stem sequence, and keeps the top_n best.
ExtractResult rank_candidates(const std::vector<CandidatePhrase>& candidates,
                              const std::vector<double>& scores, int top_n);

/// Co-occurrence graph + position-biased PageRank + phrase scoring.
ExtractResult positionrank_extract(const TaggedDocument& doc,
                                   const ExtractOptions& options);

/// Same pipeline with a uniform bias vector.
ExtractResult textrank_extract(const TaggedDocument& doc,
                               const ExtractOptions& options);

} // namespace kexkit

#endif // KEXKIT_EXTRACT_HPP_
