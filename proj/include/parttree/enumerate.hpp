#pragma once

// Row-at-a-time generation of the partition matrix in canonical order: the
// first row is the most condensed distribution (all shifts zero), the root
// shift varies slowest and j[1] fastest. Working state is O(m); the matrix
// is never materialized.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "parttree/counting.hpp"
#include "parttree/detail/odometer.hpp"
#include "parttree/types.hpp"

namespace parttree {

/// Lazy single-consumer stream over the rows for one (n, m). Two streams
/// over the same spec are independent and yield identical sequences.
class PartitionStream {
public:
    explicit PartitionStream(PartitionSpec spec);

    const PartitionSpec& spec() const noexcept { return spec_; }

    /// Next row, or nullopt once exhausted (then stays exhausted).
    std::optional<Partition> next();

private:
    PartitionSpec spec_;
    std::optional<detail::JOdometer> odo_;  // empty for single-row instances
    bool exhausted_ = false;
};

/// Every partition of n, grouped by ascending part count; yields
/// (m, row) pairs, p(n) rows in total.
class AllPartitionsStream {
public:
    explicit AllPartitionsStream(std::uint64_t n);

    std::optional<std::pair<std::uint64_t, Partition>> next();

private:
    std::uint64_t n_;
    std::uint64_t m_ = 1;
    std::optional<PartitionStream> current_;
};

/// Called once per distinct valid prefix, with the shift values outermost
/// level first (levels top .. `level`).
using PrefixVisitor = std::function<void(const std::vector<std::uint64_t>&)>;

/// Walks all prefixes ending at `level` (1 <= level <= top_level) in
/// canonical order and returns the visit count, which equals the node count
/// at that level. Requires a nontrivial tree.
LevelCount visit_prefixes(const PartitionSpec& spec, std::uint64_t level,
                          const PrefixVisitor& visit);
LevelCount visit_prefixes(const PartitionSpec& spec, std::uint64_t level);

}  // namespace parttree
