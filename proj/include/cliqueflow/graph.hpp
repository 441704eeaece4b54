#ifndef CLIQUEFLOW_GRAPH_HPP
#define CLIQUEFLOW_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace cliqueflow {

// Undirected edge, normalized so that first < second.
using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Normalizes endpoint order, sorts, and collapses duplicate edges.
    // Throws std::invalid_argument on self-loops or endpoints outside 0..n-1.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
    int min_degree() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted, unique, each first < second
};

/// A vertex set claimed to induce a complete subgraph.
struct CliqueWitness {
    std::vector<int> vertices;  // sorted, distinct

    int size() const { return static_cast<int>(vertices.size()); }

    // True iff every pair of listed vertices is an edge of g (and ids are valid).
    bool validates(const Graph& g) const;

    bool operator==(const CliqueWitness&) const = default;
};

// G(n,p) with every pair drawn independently. Pure function of (n, p, seed).
Graph gen_erdos_renyi(int n, double p, std::uint64_t seed);

// A k-clique planted on a random vertex subset; all other pairs drawn with
// probability p. Throws std::invalid_argument unless 2 <= k <= n.
std::pair<Graph, CliqueWitness> gen_planted_clique(int n, int k, double p,
                                                   std::uint64_t seed);

/// Streams every labeled graph on n vertices exactly once (2^(n(n-1)/2) of
/// them), in ascending edge-mask order with pairs ranked lexicographically.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n, int n_cap = kDefaultCap);

    static constexpr int kDefaultCap = 7;

    std::uint64_t total() const { return total_; }
    bool has_next() const { return next_mask_ < total_; }
    Graph next();

private:
    int n_ = 0;
    std::vector<Edge> pairs_;
    std::uint64_t next_mask_ = 0;
    std::uint64_t total_ = 0;
};

}  // namespace cliqueflow

#endif  // CLIQUEFLOW_GRAPH_HPP
