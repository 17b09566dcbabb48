#ifndef KEXKIT_BIBRANK_HPP_
#define KEXKIT_BIBRANK_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include "kexkit/dataset.hpp"
#include "kexkit/extract.hpp"

namespace kexkit {

/// AND-combined attribute predicates over {year, topic, journal,
/// source_file}.
struct ContextClause {
    enum class Kind { Equals, InSet, Range };
    std::string attribute;
    Kind kind = Kind::Equals;
    std::vector<std::string> values; // Equals/InSet
    int lo = 0, hi = 0;              // Range (inclusive, year only)
};

struct ContextSpec {
    std::vector<ContextClause> clauses; // empty -> every record
};

/// Parses "attr=value,attr=v1|v2,year=1980..1987". Throws
/// std::invalid_argument for unknown attributes or malformed clauses.
ContextSpec parse_context_spec(std::string_view text);

/// Records satisfying every clause, ordered by id.
std::vector<const BibRecord*> select_context(const Dataset& ds,
                                             const ContextSpec& spec);

/// Max-normalized document frequency of gold keyphrases across a context
/// (Eq-2 style bib weights). Keys are stem-normalized phrases; a phrase
/// repeated inside one record's list counts once.
struct BibWeightTable {
    std::unordered_map<std::string, double> lambda; // in (0, 1]
    double bib_norm = 0.0;                          // max raw count
    int context_size = 0;

    bool empty() const { return lambda.empty(); }
    double weight(const std::string& normalized_key) const {
        auto it = lambda.find(normalized_key);
        return it == lambda.end() ? 0.0 : it->second;
    }
};

BibWeightTable compute_bib_weights(const std::vector<const BibRecord*>& context);

/// Everything a bibrank run needs besides the dataset.
struct BibRankConfig {
    RankParams rank;
    ContextSpec context;
};

/// Position-biased PageRank word scores plus the phrase's bib weight
/// (S_final = sum of word scores + lambda). With an empty table the output
/// equals positionrank_extract exactly.
ExtractResult bibrank_extract(const TaggedDocument& doc, const BibWeightTable& weights,
                              const ExtractOptions& options);

} // namespace kexkit

#endif // KEXKIT_BIBRANK_HPP_
