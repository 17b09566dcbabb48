#include "kexkit/extract.hpp"

#include <algorithm>
#include <numeric>

namespace kexkit {
namespace {

ExtractResult graph_extract(const TaggedDocument& doc, const ExtractOptions& options,
                            bool position_biased) {
    const StopwordSet& stopwords = options.stopword_set();
    auto candidates = select_candidates(doc, options.max_phrase_len, stopwords);
    WordGraph graph = build_graph(doc, options.rank.window, stopwords);
    BiasVector bias = position_biased ? position_bias(doc, stopwords)
                                      : uniform_bias(graph);
    ScoreVector scores = pagerank(graph, bias, options.rank);
    int missing = 0;
    std::vector<double> phrase_scores = score_phrases(candidates, scores, &missing);
    ExtractResult result = rank_candidates(candidates, phrase_scores, options.rank.top_n);
    result.iterations = scores.iterations;
    result.converged = scores.converged;
    result.missing_stems = missing;
    return result;
}

} // namespace

ExtractResult rank_candidates(const std::vector<CandidatePhrase>& candidates,
                              const std::vector<double>& scores, int top_n) {
    ExtractResult result;
    std::vector<size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return candidates[a].stems < candidates[b].stems;
    });
    size_t keep = candidates.size();
    if (top_n >= 0) keep = std::min(keep, static_cast<size_t>(top_n));
    result.phrases.reserve(keep);
    for (size_t k = 0; k < keep; k++) {
        const CandidatePhrase& cand = candidates[order[k]];
        ScoredPhrase sp;
        for (const std::string& surface : cand.surfaces) {
            if (!sp.text.empty()) sp.text.push_back(' ');
            sp.text += surface;
        }
        sp.stems = cand.stems;
        sp.score = scores[order[k]];
        result.phrases.push_back(std::move(sp));
    }
    return result;
}

ExtractResult positionrank_extract(const TaggedDocument& doc,
                                   const ExtractOptions& options) {
    return graph_extract(doc, options, true);
}

ExtractResult textrank_extract(const TaggedDocument& doc,
                               const ExtractOptions& options) {
    return graph_extract(doc, options, false);
}

} // namespace kexkit
