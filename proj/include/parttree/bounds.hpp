#pragma once

// Shift bounds and row construction.
//
// A partition of n into m parts is reached by moving the k = n - m excess
// balls out of bin 0 into later bins; j[a] is the number of balls moved into
// bin a. Admissible shifts are bounded level by level: once the shifts above
// a level are fixed, the leftover excess must still spread over that bin and
// every bin to its left without breaking the nonincreasing order.

#include <cstdint>
#include <vector>

#include "parttree/types.hpp"

namespace parttree {

/// A walk from the tree root toward level 1: the shift values fixed so far,
/// outermost level first. Order and bound invariants hold by construction;
/// push() rejects violations.
class JPath {
public:
    explicit JPath(PartitionSpec spec) : spec_(spec) {}

    /// Builds a path by pushing `root_first` in order; throws on any
    /// invalid value.
    static JPath from_values(PartitionSpec spec,
                             const std::vector<std::uint64_t>& root_first);

    const PartitionSpec& spec() const noexcept { return spec_; }

    /// Recorded values, outermost level first.
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    std::uint64_t top_level() const noexcept { return spec_.top_level(); }

    /// Level of the most recently fixed value; call only when !empty().
    std::uint64_t lowest_level() const noexcept {
        return top_level() + 1 - values_.size();
    }

    /// All levels down to 1 are fixed (immediately true for the degenerate
    /// single-row instances, whose path is empty).
    bool complete() const noexcept { return values_.size() == top_level(); }

    std::uint64_t sum() const noexcept { return sum_; }

    std::uint64_t at_level(std::uint64_t level) const;

    /// Fixes the next lower level. Throws std::domain_error when the value
    /// drops below the one above it or exceeds its level bound.
    void push(std::uint64_t j);

    /// Removes the most recently fixed value.
    void pop();

private:
    PartitionSpec spec_;
    std::vector<std::uint64_t> values_;
    std::uint64_t sum_ = 0;
};

/// Minus iff m < k; the boundary m == k is Plus.
inline Regime regime(const PartitionSpec& spec) noexcept { return spec.regime(); }

/// Largest admissible shift at `level` given the sum of the shifts already
/// fixed above it. At the root this is floor(n/m) - 1 (Minus) or the
/// constant 1 (Plus); below the root the leftover excess k - sum_above must
/// spread at least as thickly over each of the level+1 bins at and left of
/// the level, so the bound is floor((k - sum_above) / (level + 1)).
std::uint64_t level_bound(const PartitionSpec& spec, std::uint64_t level,
                          std::uint64_t sum_above);

/// Root bound for a Minus-regime instance with m >= 2: floor(n/m) - 1.
std::uint64_t jmax_minus_root(const PartitionSpec& spec);

/// Minus-regime bound at 1 <= level <= m-2; `suffix` must fix exactly the
/// levels m-1 .. level+1.
std::uint64_t jmax_minus(const PartitionSpec& spec, std::uint64_t level,
                         const JPath& suffix);

/// Plus-regime bound at 1 <= level <= k-2 (k >= 3); `suffix` must fix
/// exactly the levels k-1 .. level+1.
std::uint64_t jmax_plus(const PartitionSpec& spec, std::uint64_t level,
                        const JPath& suffix);

/// Turns a complete path into its partition row. Minus:
/// (k+1-sum, 1+j[1], ..., 1+j[m-1]); Plus: (k+1-sum, 1+j[1], ...,
/// 1+j[k-1]) padded with m-k ones. The single-row instances map from the
/// empty path: (n), all ones, or (2, 1, ..., 1).
Partition row_from_jpath(const JPath& path);

namespace detail {

/// Row construction shared by row_from_jpath and the streaming enumerator;
/// j_by_level[a] holds the shift at level a (index 0 unused).
Partition build_row(const PartitionSpec& spec,
                    const std::vector<std::uint64_t>& j_by_level,
                    std::uint64_t shifted_total);

}  // namespace detail

}  // namespace parttree
