#ifndef KEXKIT_EVALUATE_HPP_
#define KEXKIT_EVALUATE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "kexkit/bibrank.hpp"
#include "kexkit/dataset.hpp"
#include "kexkit/extract.hpp"
#include "kexkit/tagger.hpp"

namespace kexkit {

/// Exact match after normalization: lowercase, Porter-stem each token, join
/// with single spaces (normalize_phrase_key). Counts are over distinct
/// normalized forms.
struct PairScore {
    int predicted = 0;
    int gold = 0;
    int hits = 0;
    double p = 0.0, r = 0.0, f1 = 0.0;
};

PairScore score_pair(const std::vector<std::string>& predicted,
                     const std::vector<std::string>& gold);

/// Distinct normalized predicted phrases present in the normalized gold set.
int match_hits(const std::vector<std::string>& predicted,
               const std::vector<std::string>& gold);

struct DocScore {
    std::string id;
    PairScore score;
};

struct EvalReport {
    std::string algo;
    RankParams params;
    std::string filter;  // test-set spec, echoed
    std::string context; // bib-weight context spec, echoed
    int k = 10;
    std::vector<DocScore> per_doc; // ordered by document id
    double p = 0.0, r = 0.0, f1 = 0.0; // unweighted (macro) means
};

enum class ReportFormat { Json, Text };

/// Canonical JSON (sorted keys) or an aligned plain-text table; identical
/// reports render to identical bytes.
std::string render_report(const EvalReport& report, ReportFormat format);

/// Per-document extraction hook: the record under evaluation plus its tagged
/// abstract. Must be safe to call from multiple threads.
using DocExtractor =
    std::function<ExtractResult(const BibRecord&, const TaggedDocument&)>;

struct EvalOptions {
    ExtractOptions extract;
    const Tagger* tagger = nullptr; // null -> LexiconTagger
    int jobs = 1;
};

/// Core harness: runs the extractor over the filtered test set, scores
/// each document's top-k against its gold keyphrases and macro-averages.
/// Throws std::runtime_error("empty_test_set") when the filter matches
/// nothing. Output is deterministic and independent of the job count.
EvalReport evaluate_with(const Dataset& ds, const ContextSpec& test_filter,
                         const DocExtractor& extractor, const EvalOptions& options);

/// Registry-driven variant: looks up the algorithm by name (textrank,
/// positionrank, bibrank, tfidf) and applies the no-leak rule for bibrank
/// (the document under evaluation is dropped from its own context).
EvalReport evaluate_run(const Dataset& ds, const std::string& test_filter_spec,
                        const std::string& context_spec, const std::string& algo,
                        const EvalOptions& options);

} // namespace kexkit

#endif // KEXKIT_EVALUATE_HPP_
