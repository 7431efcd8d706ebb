#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccf/graph.hpp"

namespace ccf {

// A partition of V into nonempty coalitions, each of size at most the
// owning instance's capacity.
struct CPartition {
    std::vector<std::vector<int>> coalitions;

    // Members ascending, coalitions ordered by smallest member.
    CPartition normalized() const;
};

// Total weight of edges with both endpoints in the same coalition.
// Throws std::invalid_argument if p misses, repeats, or exceeds the vertex
// range; coalition sizes are validate()'s concern.
long long value(const Instance& inst, const CPartition& p);

// nullopt when p covers every vertex exactly once and every coalition fits
// the capacity; otherwise a description of the first violated condition.
std::optional<std::string> validate(const Instance& inst, const CPartition& p);

// True when no vertex strictly gains by moving to another coalition with
// spare capacity. Moving to a fresh empty coalition yields gain 0, which
// nonnegative weights can never beat. Requires validate(inst, p) == ok.
bool is_nash_stable(const Instance& inst, const CPartition& p);

}  // namespace ccf
