#include "kexkit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace kexkit {

int WordGraph::add_node(const std::string& stem) {
    auto it = node_index.find(stem);
    if (it != node_index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    nodes.push_back(stem);
    node_index.emplace(stem, id);
    adjacency.emplace_back();
    out_weight.push_back(0.0);
    return id;
}

void WordGraph::add_edge(int a, int b, double weight) {
    if (a == b) return;
    auto bump = [&](int from, int to) {
        for (auto& [n, w] : adjacency[static_cast<size_t>(from)]) {
            if (n == to) {
                w += weight;
                return;
            }
        }
        adjacency[static_cast<size_t>(from)].emplace_back(to, weight);
    };
    bump(a, b);
    bump(b, a);
    out_weight[static_cast<size_t>(a)] += weight;
    out_weight[static_cast<size_t>(b)] += weight;
}

double WordGraph::edge_weight(const std::string& a, const std::string& b) const {
    auto ia = node_index.find(a);
    auto ib = node_index.find(b);
    if (ia == node_index.end() || ib == node_index.end()) return 0.0;
    for (const auto& [n, w] : adjacency[static_cast<size_t>(ia->second)])
        if (n == ib->second) return w;
    return 0.0;
}

double ScoreVector::sum() const {
    double total = 0.0;
    for (const auto& [stem, value] : score) total += value;
    return total;
}

WordGraph build_graph(const TaggedDocument& doc, int window,
                      const StopwordSet& stopwords) {
    WordGraph graph;
    if (window < 1) window = 1;
    std::vector<int> sequence; // node ids of qualifying tokens, in order
    for (const Token& tok : doc.tokens)
        if (qualifies(tok, stopwords)) sequence.push_back(graph.add_node(tok.stem));
    for (size_t i = 0; i < sequence.size(); i++) {
        size_t hi = std::min(sequence.size(), i + static_cast<size_t>(window) + 1);
        for (size_t j = i + 1; j < hi; j++)
            graph.add_edge(sequence[i], sequence[j], 1.0);
    }
    return graph;
}

std::unordered_map<std::string, double>
position_raw_weights(const TaggedDocument& doc, const StopwordSet& stopwords) {
    std::unordered_map<std::string, double> raw;
    for (const Token& tok : doc.tokens)
        if (qualifies(tok, stopwords))
            raw[tok.stem] += 1.0 / static_cast<double>(tok.doc_position);
    return raw;
}

BiasVector position_bias(const TaggedDocument& doc, const StopwordSet& stopwords) {
    BiasVector bias;
    auto raw = position_raw_weights(doc, stopwords);
    double total = 0.0;
    for (const auto& [stem, w] : raw) total += w;
    if (total <= 0.0) return bias;
    for (const auto& [stem, w] : raw) bias.weight.emplace(stem, w / total);
    return bias;
}

BiasVector uniform_bias(const WordGraph& graph) {
    BiasVector bias;
    if (graph.empty()) return bias;
    double p = 1.0 / static_cast<double>(graph.nodes.size());
    for (const std::string& stem : graph.nodes) bias.weight.emplace(stem, p);
    return bias;
}

ScoreVector pagerank(const WordGraph& graph, const BiasVector& bias,
                     const RankParams& params) {
    ScoreVector result;
    const size_t n = graph.nodes.size();
    if (n == 0) return result;

    std::vector<double> p(n, 0.0);
    double total = 0.0;
    for (size_t i = 0; i < n; i++) {
        auto it = bias.weight.find(graph.nodes[i]);
        if (it != bias.weight.end()) p[i] = it->second;
        total += p[i];
    }
    if (total > 0.0) {
        for (double& v : p) v /= total;
    } else {
        std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(n));
    }

    const double d = params.damping;
    std::vector<double> s = p;
    std::vector<double> next(n, 0.0);
    bool converged = false;
    int iterations = 0;
    while (iterations < params.max_iter) {
        iterations++;
        double dangling = 0.0;
        for (size_t j = 0; j < n; j++)
            if (graph.out_weight[j] <= 0.0) dangling += s[j];
        for (size_t i = 0; i < n; i++)
            next[i] = (1.0 - d) * p[i] + d * dangling * p[i];
        for (size_t j = 0; j < n; j++) {
            if (graph.out_weight[j] <= 0.0) continue;
            double share = d * s[j] / graph.out_weight[j];
            for (const auto& [i, w] : graph.adjacency[j])
                next[static_cast<size_t>(i)] += share * w;
        }
        double delta = 0.0;
        for (size_t i = 0; i < n; i++) delta += std::fabs(next[i] - s[i]);
        s.swap(next);
        if (delta < params.tol) {
            converged = true;
            break;
        }
    }

    result.iterations = iterations;
    result.converged = converged;
    for (size_t i = 0; i < n; i++) result.score.emplace(graph.nodes[i], s[i]);
    return result;
}

std::vector<double> score_phrases(const std::vector<CandidatePhrase>& candidates,
                                  const ScoreVector& scores,
                                  int* missing_stems) {
    std::vector<double> out;
    out.reserve(candidates.size());
    int missing = 0;
    for (const CandidatePhrase& phrase : candidates) {
        double total = 0.0;
        std::set<std::string> seen;
        for (const std::string& stem : phrase.stems) {
            if (!seen.insert(stem).second) continue; // each distinct stem once
            auto it = scores.score.find(stem);
            if (it == scores.score.end()) {
                missing++;
                continue;
            }
            total += it->second;
        }
        out.push_back(total);
    }
    if (missing_stems) *missing_stems = missing;
    return out;
}

} // namespace kexkit
