#pragma once

#include "ccf/errors.hpp"
#include "ccf/io.hpp"

namespace ccf {

struct OracleOptions {
    int limit = 12;  // refuse instances with more vertices
    Deadline deadline;
};

// Brute-force optimum over all C-partitions, enumerated as restricted-growth
// strings with block-size cap C. Ties keep the first partition in
// enumeration order. Throws PreconditionError above the vertex limit.
SolveResult solve_exact(const Instance& inst, const OracleOptions& opts = {});

// Materialized list of every partition of {0..n-1} with blocks of size <= cap.
// Guarded by the same desk-scale limit as the solver.
std::vector<CPartition> enumerate_c_partitions(int n, int cap, int limit = 12);

}  // namespace ccf
