#include "cliqueflow/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace cliqueflow {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    auto deg = degrees();
    return *std::min_element(deg.begin(), deg.end());
}

bool CliqueWitness::validates(const Graph& g) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.vertex_count()) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
    return true;
}

namespace {

// Uniform draw in [0,1) that depends only on the engine's specified output
// sequence, so generated graphs are identical across platforms.
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_erdos_renyi: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit_draw(rng) < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

std::pair<Graph, CliqueWitness> gen_planted_clique(int n, int k, double p,
                                                   std::uint64_t seed) {
    if (k < 2 || k > n)
        throw std::invalid_argument("gen_planted_clique: k must satisfy 2 <= k <= n");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("gen_planted_clique: p outside [0,1]");

    std::mt19937_64 rng(seed);

    // Partial Fisher-Yates to pick the clique vertices.
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int i = 0; i < k; ++i) {
        std::uint64_t j = i + rng() % static_cast<std::uint64_t>(n - i);
        std::swap(ids[i], ids[j]);
    }
    std::vector<int> members(ids.begin(), ids.begin() + k);
    std::sort(members.begin(), members.end());

    std::vector<char> in_clique(n, 0);
    for (int v : members) in_clique[v] = 1;

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (in_clique[u] && in_clique[v])
                edges.emplace_back(u, v);
            else if (unit_draw(rng) < p)
                edges.emplace_back(u, v);
        }
    return {Graph(n, std::move(edges)), CliqueWitness{std::move(members)}};
}

GraphEnumerator::GraphEnumerator(int n, int n_cap) : n_(n) {
    if (n < 0) throw std::invalid_argument("GraphEnumerator: negative n");
    if (n > n_cap)
        throw std::invalid_argument("GraphEnumerator: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(n_cap) +
                                    " (" + std::to_string(n * (n - 1) / 2) + " edge bits)");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
    total_ = std::uint64_t{1} << pairs_.size();
}

Graph GraphEnumerator::next() {
    if (!has_next()) throw std::out_of_range("GraphEnumerator: exhausted");
    std::uint64_t mask = next_mask_++;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs_.size(); ++b)
        if (mask >> b & 1) edges.push_back(pairs_[b]);
    return Graph(n_, std::move(edges));
}

}  // namespace cliqueflow
