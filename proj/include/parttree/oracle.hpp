#pragma once

// Independent ground truth for tests and the verify command: a dynamic
// programming table for the counts (recurrence p(n,m) = p(n-1,m-1) +
// p(n-m,m)) and a naive recursive generator for the rows. Deliberately kept
// simple enough to trust; shares no code with the tree formulas.

#include <cstdint>
#include <vector>

#include "parttree/types.hpp"

namespace parttree::oracle {

class DpTable {
public:
    explicit DpTable(std::uint64_t n_max);

    std::uint64_t n_max() const noexcept { return n_max_; }

    /// p(n, m) for n, m <= n_max (zero when m > n).
    const Count& count(std::uint64_t n, std::uint64_t m) const;

    /// p(n) = sum over m of p(n, m).
    Count total(std::uint64_t n) const;

private:
    const Count& at(std::uint64_t n, std::uint64_t m) const {
        return cells_[n * (n_max_ + 1) + m];
    }
    Count& at(std::uint64_t n, std::uint64_t m) {
        return cells_[n * (n_max_ + 1) + m];
    }

    std::uint64_t n_max_;
    std::vector<Count> cells_;
};

/// One-shot table lookups; build a DpTable when querying many cells.
Count dp_count(std::uint64_t n, std::uint64_t m);
Count dp_total(std::uint64_t n);

/// brute_enumerate refuses n above this; its output is exponential.
inline constexpr std::uint64_t kBruteLimit = 30;

/// Every partition of n into exactly m parts, sorted lexicographically.
std::vector<Partition> brute_enumerate(std::uint64_t n, std::uint64_t m);

}  // namespace parttree::oracle
