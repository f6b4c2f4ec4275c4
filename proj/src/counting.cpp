#include "parttree/counting.hpp"

#include <stdexcept>

#include "parttree/bounds.hpp"
#include "parttree/detail/odometer.hpp"

namespace parttree {

namespace {

// Shared nested-sum core: iterate every prefix j[2..top] and add the size
// of the innermost range, bound(1) - j[2] + 1. Cost is one term per
// level-2 prefix, which grows with the count itself; the DP oracle is the
// fast path when speed matters.
Count nested_path_count(const PartitionSpec& spec) {
    Count total = 0;
    for (detail::JOdometer odo(spec, 2); !odo.done(); odo.advance())
        total += odo.remaining(2) / 2 - odo.value(2) + 1;
    return total;
}

}  // namespace

LevelCount node_count(const PartitionSpec& spec, std::uint64_t level) {
    if (!spec.has_tree())
        throw std::domain_error("node_count: instance has no tree");
    if (level < 1 || level > spec.top_level() - 1)
        throw std::domain_error("node_count: level out of range");
    Count total = 0;
    for (detail::JOdometer odo(spec, level + 1); !odo.done(); odo.advance())
        total += odo.remaining(level + 1) / (level + 1) - odo.value(level + 1) + 1;
    return {level, total};
}

Count count_minus(const PartitionSpec& spec) {
    if (spec.regime() != Regime::minus)
        throw std::domain_error("count_minus: spec is not in the Minus regime");
    if (spec.m() == 1)
        return 1;
    if (spec.m() == 2)
        return (spec.n() - spec.n() % 2) / 2;
    return nested_path_count(spec);
}

Count count_plus(const PartitionSpec& spec) {
    if (spec.regime() != Regime::plus)
        throw std::domain_error("count_plus: spec is not in the Plus regime");
    if (spec.k() <= 1)
        return 1;  // the all-ones row, or (2, 1, ..., 1)
    if (spec.k() == 2)
        return 2;  // (3, 1, ...) and (2, 2, 1, ...)
    return nested_path_count(spec);
}

Count count_parts(const PartitionSpec& spec) {
    return spec.regime() == Regime::minus ? count_minus(spec) : count_plus(spec);
}

Count count_all(std::uint64_t n) {
    if (n < 1)
        throw std::invalid_argument("count_all: n must be >= 1");
    if (n < 7) {
        // The split form below assumes the two nested-sum windows are
        // disjoint from the simple rows, which fails for small n.
        Count total = 0;
        for (std::uint64_t m = 1; m <= n; ++m)
            total += count_parts(PartitionSpec(n, m));
        return total;
    }
    const std::uint64_t half = (n - n % 2) / 2;
    // 5 = p(n,1) + p(n,n-2) + p(n,n-1) + p(n,n); half = p(n,2).
    Count total = Count(5) + half;
    const std::uint64_t minus_hi = (n % 2 == 0) ? half - 1 : half;
    for (std::uint64_t m = 3; m <= minus_hi; ++m)
        total += count_minus(PartitionSpec(n, m));
    for (std::uint64_t m = minus_hi + 1; m <= n - 3; ++m)
        total += count_plus(PartitionSpec(n, m));
    return total;
}

}  // namespace parttree
