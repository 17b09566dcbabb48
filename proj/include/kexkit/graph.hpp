#ifndef KEXKIT_GRAPH_HPP_
#define KEXKIT_GRAPH_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include "kexkit/candidates.hpp"
#include "kexkit/stopwords.hpp"
#include "kexkit/textproc.hpp"

namespace kexkit {

struct RankParams {
    double damping = 0.85;
    int window = 2;
    double tol = 1e-6;
    int max_iter = 100;
    int top_n = 10;
};

/// Undirected word co-occurrence graph over the stems of qualifying tokens
/// (ADJ/NOUN/PROPN, non-stopword). Nodes are kept in first-appearance order;
/// edge weights are symmetric co-occurrence counts, no self-loops.
struct WordGraph {
    std::vector<std::string> nodes;
    std::unordered_map<std::string, int> node_index;
    std::vector<std::vector<std::pair<int, double>>> adjacency;
    std::vector<double> out_weight; // sum of incident edge weights

    bool empty() const { return nodes.empty(); }
    int add_node(const std::string& stem);
    void add_edge(int a, int b, double weight);
    double edge_weight(const std::string& a, const std::string& b) const;
};

struct BiasVector {
    std::unordered_map<std::string, double> weight; // normalized to sum 1
};

struct ScoreVector {
    std::unordered_map<std::string, double> score;
    int iterations = 0;
    bool converged = true;

    double sum() const;
};

/// Connects qualifying words that co-occur within `window` positions of the
/// qualifying-word sequence (intervening non-qualifying words are skipped
/// over); each co-occurrence increments the symmetric edge weight. Same-stem
/// pairs never create self-loops.
WordGraph build_graph(const TaggedDocument& doc, int window,
                      const StopwordSet& stopwords);

/// Sum of reciprocal document positions per qualifying stem, unnormalized.
std::unordered_map<std::string, double>
position_raw_weights(const TaggedDocument& doc, const StopwordSet& stopwords);

/// Reciprocal-position weights normalized to sum 1 over the qualifying stems.
BiasVector position_bias(const TaggedDocument& doc, const StopwordSet& stopwords);

/// Uniform bias 1/|V| over the graph's nodes.
BiasVector uniform_bias(const WordGraph& graph);

/// Biased PageRank by power iteration: S <- (1-d)*p + d*M*S, where a node
/// with no edges redistributes its mass to every node proportionally to the
/// bias. Starts from S = p, stops when the L1 change drops below tol or
/// max_iter is reached.
ScoreVector pagerank(const WordGraph& graph, const BiasVector& bias,
                     const RankParams& params);

/// Sums word scores over each phrase's distinct stems; stems absent from the
/// score vector contribute 0 and are tallied in missing_stems.
std::vector<double> score_phrases(const std::vector<CandidatePhrase>& candidates,
                                  const ScoreVector& scores,
                                  int* missing_stems = nullptr);

} // namespace kexkit

#endif // KEXKIT_GRAPH_HPP_
