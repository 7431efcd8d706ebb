#include "ccf/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ccf {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.w < 0) throw std::invalid_argument("negative edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert({e.u, e.v}).second)
            throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
        edges_.push_back(e);
        adj_[e.u].push_back({e.v, e.w});
        adj_[e.v].push_back({e.u, e.w});
        total_weight_ += e.w;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool WeightedGraph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<int, long long>{v, -1});
    return it != nb.end() && it->first == v;
}

long long WeightedGraph::weight(int u, int v) const {
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<int, long long>{v, -1});
    return (it != nb.end() && it->first == v) ? it->second : 0;
}

bool WeightedGraph::is_unweighted() const {
    for (const Edge& e : edges_)
        if (e.w != 1) return false;
    return true;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<int>& keep) {
    std::vector<int> index(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.push_back({index[e.u], index[e.v], e.w});
    return WeightedGraph(static_cast<int>(keep.size()), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const WeightedGraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, verts;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (auto [v, w] : g.neighbors(u)) {
                (void)w;
                if (comp[v] < 0) {
                    comp[v] = comp[s];
                    stack.push_back(v);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

}  // namespace ccf
