#pragma once

#include <utility>
#include <vector>

namespace ccf {

struct Edge {
    int u = 0;
    int v = 0;
    long long w = 0;
};

// Undirected graph with nonnegative integer edge weights. Vertices are dense
// 0-based indices. Self-loops and duplicate unordered pairs are rejected at
// construction; stored edges are normalized to u < v.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n) : n_(n), adj_(n) {}
    WeightedGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // (vertex, weight) pairs sorted by vertex.
    const std::vector<std::pair<int, long long>>& neighbors(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const;
    long long weight(int u, int v) const;  // 0 if not adjacent
    long long total_weight() const { return total_weight_; }
    bool is_unweighted() const;  // every edge has weight exactly 1

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, long long>>> adj_;
    long long total_weight_ = 0;
};

struct Instance {
    WeightedGraph graph;
    int capacity = 1;  // C >= 1; C > n is legal and equivalent to C = n
};

// Subgraph induced by `keep` (sorted, distinct); vertex i of the result is
// keep[i]. Used by the kernel and the vertex-integrity solver.
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& keep);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const WeightedGraph& g);

}  // namespace ccf
