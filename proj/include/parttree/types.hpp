#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parttree {

// Exact nonnegative count. Counting is integer-exact throughout; fixed-width
// arithmetic would overflow once partition counts pass 2^64 (around n ~ 400).
using Count = boost::multiprecision::cpp_int;

// One partition row: m positive parts, nonincreasing, summing to n.
using Partition = std::vector<std::uint64_t>;

// Piecewise structure selector. Minus covers m < k, Plus covers m >= k,
// where k = n - m is the excess above one ball per bin.
enum class Regime { minus, plus };

/// The problem instance (n, m): partitions of n into exactly m parts.
class PartitionSpec {
public:
    PartitionSpec(std::uint64_t n, std::uint64_t m) : n_(n), m_(m) {
        if (m < 1 || n < m)
            throw std::invalid_argument("PartitionSpec: need 1 <= m <= n");
    }

    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t m() const noexcept { return m_; }

    /// Excess balls above the all-singlet occupancy.
    std::uint64_t k() const noexcept { return n_ - m_; }

    Regime regime() const noexcept {
        return m_ < k() ? Regime::minus : Regime::plus;
    }

    /// Outermost tree level carrying a shift value: m-1 in Minus, k-1 in
    /// Plus. Zero means the instance has a single row and an empty path
    /// (m == 1 in Minus, k <= 1 in Plus).
    std::uint64_t top_level() const noexcept {
        if (regime() == Regime::minus)
            return m_ - 1;
        return k() == 0 ? 0 : k() - 1;
    }

    /// True when the shift tree is nontrivial (at least two levels), i.e.
    /// m >= 3 in Minus or k >= 3 in Plus.
    bool has_tree() const noexcept { return top_level() >= 2; }

    friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;

private:
    std::uint64_t n_;
    std::uint64_t m_;
};

/// Checks size, positivity, nonincreasing order, and the total.
bool is_valid_partition(const PartitionSpec& spec, const Partition& parts);

}  // namespace parttree
