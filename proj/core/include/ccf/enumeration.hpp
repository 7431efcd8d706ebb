#pragma once

#include <vector>

namespace ccf {

// Visits every partition of {0..n-1} whose blocks have size <= cap, exactly
// once, in restricted-growth-string order. `visit` receives the blocks as a
// const std::vector<std::vector<int>>&; the buffer is reused between calls.
// n == 0 visits the empty partition once.
template <typename Visit>
void for_each_capped_partition(int n, int cap, Visit&& visit) {
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int next) -> void {
        if (next == n) {
            visit(const_cast<const std::vector<std::vector<int>>&>(blocks));
            return;
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (static_cast<int>(blocks[b].size()) >= cap) continue;
            blocks[b].push_back(next);
            self(self, next + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({next});
        self(self, next + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

}  // namespace ccf
