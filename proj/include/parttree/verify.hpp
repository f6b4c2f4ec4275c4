#pragma once

// Self-check suite behind the verify command: tree counts against the DP
// oracle, streamed rows against the counts, node counts against visited
// prefixes. The report text is deterministic.

#include <cstdint>
#include <functional>
#include <string>

#include "parttree/types.hpp"

namespace parttree {

struct VerifyReport {
    bool ok = true;
    std::string text;  // one line per check plus a trailing summary
};

/// Runs every check up to n_max (enumeration and node checks are capped at
/// n <= 30). A failing check names the first mismatching (n, m).
VerifyReport run_verify(std::uint64_t n_max);

namespace detail {

/// Seam for exercising the failure path: `counter` stands in for the tree
/// count of a spec.
using CountFn = std::function<Count(const PartitionSpec&)>;
VerifyReport run_verify_with(std::uint64_t n_max, const CountFn& counter);

}  // namespace detail

}  // namespace parttree
