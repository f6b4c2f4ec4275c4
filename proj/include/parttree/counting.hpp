#pragma once

// Path and node counting over the shift tree. p(n, m) equals the number of
// directed root-to-level-1 paths, evaluated as a nested sum with one
// closed-form innermost term per level-2 prefix; p(n) splits the sum over m
// into the two regimes plus the constant simple rows.

#include <cstdint>

#include "parttree/types.hpp"

namespace parttree {

/// Number of distinct nodes (valid prefixes) at one tree level.
struct LevelCount {
    std::uint64_t level;
    Count count;
};

/// Nodes at `level`, for 1 <= level <= top_level - 1; the level-1 count
/// equals count_parts. Requires a nontrivial tree (m >= 3 in Minus, k >= 3
/// in Plus).
LevelCount node_count(const PartitionSpec& spec, std::uint64_t level);

/// p(n, m) for a Minus-regime instance: 1 for m == 1, floor(n/2) for
/// m == 2, the nested path sum otherwise.
Count count_minus(const PartitionSpec& spec);

/// p(n, m) for a Plus-regime instance: 1 for k <= 1, 2 for k == 2, the
/// nested path sum otherwise.
Count count_plus(const PartitionSpec& spec);

/// p(n, m): dispatches on the regime.
Count count_parts(const PartitionSpec& spec);

/// p(n): for n >= 7 the split form 5 + floor(n/2) + Minus-sum + Plus-sum
/// (the 5 covers the rows m = 1, n-2, n-1, n and floor(n/2) the m = 2 row);
/// below 7 the per-m counts are summed directly since the regime windows
/// collide.
Count count_all(std::uint64_t n);

}  // namespace parttree
