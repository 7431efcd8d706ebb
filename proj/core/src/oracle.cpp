#include "ccf/oracle.hpp"

#include <string>

#include "ccf/enumeration.hpp"
#include "ccf/partition.hpp"

namespace ccf {

SolveResult solve_exact(const Instance& inst, const OracleOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    int n = inst.graph.vertex_count();
    if (n > opts.limit)
        throw PreconditionError("oracle limit: " + std::to_string(n) + " vertices > " +
                                std::to_string(opts.limit));
    int cap = inst.capacity;

    // suffix[i] = total weight of edges undecided before vertex i is placed
    std::vector<long long> suffix(n + 1, 0);
    for (const Edge& e : inst.graph.edges()) {
        int hi = std::max(e.u, e.v);
        for (int i = 0; i <= hi; ++i) suffix[i] += e.w;
    }

    std::vector<std::vector<int>> blocks, best_blocks;
    long long best = -1;
    long long steps = 0;

    auto rec = [&](auto&& self, int next, long long acc) -> void {
        if ((++steps & 0xFFF) == 0) opts.deadline.check("oracle");
        if (acc + suffix[next] <= best) return;  // cannot strictly beat the incumbent
        if (next == n) {
            best = acc;
            *best_blocks = blocks;
            return;
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (static_cast<int>(blocks[b].size()) >= cap) continue;
            long long gain = 0;
            for (int u : blocks[b]) gain += inst.graph.weight(u, next);
            blocks[b].push_back(next);
            self(self, next + 1, acc + gain);
            blocks[b].pop_back();
        }
        blocks.push_back({next});
        self(self, next + 1, acc);
        blocks.pop_back();
    };
    rec(rec, 0, 0);

    SolveResult r;
    r.value = best < 0 ? 0 : best;
    r.partition.coalitions = std::move(*best_blocks);
    delete best_blocks;
    r.solver = "oracle";
    r.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return r;
}

std::vector<CPartition> enumerate_c_partitions(int n, int cap, int limit) {
    if (n > limit)
        throw PreconditionError("enumeration limit: " + std::to_string(n) + " vertices > " +
                                std::to_string(limit));
    std::vector<CPartition> out;
    for_each_capped_partition(n, cap, [&](const std::vector<std::vector<int>>& blocks) {
        out.push_back(CPartition{blocks});
    });
    return out;
}

}  // namespace ccf
