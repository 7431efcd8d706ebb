#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccf/graph.hpp"
#include "ccf/partition.hpp"

namespace ccf {

struct SolveResult {
    long long value = 0;
    CPartition partition;
    std::string solver;
    std::chrono::milliseconds elapsed{0};
};

// Instance text format:
//   c <comment>
//   p ccf <n> <m> <C>
//   e <u> <v> <w>        (m lines, 0-based vertices, w >= 0)
// Throws ParseError on malformed header, out-of-range vertex, negative
// weight, self-loop, or duplicate edge.
Instance read_instance(std::istream& in);
Instance read_instance_string(const std::string& text);
Instance read_instance_file(const std::string& path);

// Comments are emitted as `c <line>` between the header and the edges.
std::string write_instance(const Instance& inst, const std::vector<std::string>& comments = {});

// {"coalitions": [[int,...],...], "elapsed_ms": int, "solver": str, "value": int}
std::string write_result(const SolveResult& r);

// Accepts either the write_result JSON object or a bare JSON array of
// coalitions.
CPartition read_partition_string(const std::string& text);
CPartition read_partition_file(const std::string& path);

}  // namespace ccf
