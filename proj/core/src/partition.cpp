#include "ccf/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccf {

CPartition CPartition::normalized() const {
    CPartition out = *this;
    for (auto& c : out.coalitions) std::sort(c.begin(), c.end());
    std::sort(out.coalitions.begin(), out.coalitions.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.empty() || b.empty()) return b.empty() && !a.empty();
                  return a[0] < b[0];
              });
    return out;
}

namespace {

// owner[v] = index of v's coalition; throws on missing/duplicate/range.
std::vector<int> owners_or_throw(const Instance& inst, const CPartition& p) {
    int n = inst.graph.vertex_count();
    std::vector<int> owner(n, -1);
    for (size_t i = 0; i < p.coalitions.size(); ++i) {
        for (int v : p.coalitions[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
            if (owner[v] >= 0) throw std::invalid_argument("vertex covered twice");
            owner[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] < 0) throw std::invalid_argument("vertex uncovered");
    return owner;
}

}  // namespace

long long value(const Instance& inst, const CPartition& p) {
    std::vector<int> owner = owners_or_throw(inst, p);
    long long total = 0;
    for (const Edge& e : inst.graph.edges())
        if (owner[e.u] == owner[e.v]) total += e.w;
    return total;
}

std::optional<std::string> validate(const Instance& inst, const CPartition& p) {
    int n = inst.graph.vertex_count();
    std::vector<int> owner(n, -1);
    for (size_t i = 0; i < p.coalitions.size(); ++i) {
        const auto& c = p.coalitions[i];
        if (c.empty()) return "coalition " + std::to_string(i) + " is empty";
        for (int v : c) {
            if (v < 0 || v >= n)
                return "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")";
            if (owner[v] >= 0) return "vertex " + std::to_string(v) + " covered twice";
            owner[v] = static_cast<int>(i);
        }
        if (static_cast<int>(c.size()) > inst.capacity)
            return "coalition " + std::to_string(i) + " has size " + std::to_string(c.size()) +
                   " > capacity " + std::to_string(inst.capacity);
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] < 0) return "vertex " + std::to_string(v) + " uncovered";
    return std::nullopt;
}

bool is_nash_stable(const Instance& inst, const CPartition& p) {
    int n = inst.graph.vertex_count();
    std::vector<int> owner = owners_or_throw(inst, p);
    size_t k = p.coalitions.size();
    std::vector<long long> into(k, 0);
    for (int u = 0; u < n; ++u) {
        std::fill(into.begin(), into.end(), 0);
        for (auto [v, w] : inst.graph.neighbors(u)) into[owner[v]] += w;
        long long own_gain = into[owner[u]];
        for (size_t j = 0; j < k; ++j) {
            if (static_cast<int>(j) == owner[u]) continue;
            if (static_cast<int>(p.coalitions[j].size()) >= inst.capacity) continue;
            if (into[j] > own_gain) return false;
        }
    }
    return true;
}

}  // namespace ccf
