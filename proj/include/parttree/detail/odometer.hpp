#pragma once

// Iteration engine shared by row enumeration and path counting. The nesting
// depth of the loops depends on the instance (m-1 or k-1 levels), so the
// recursion is flattened into an odometer over the shift values: the root
// level moves slowest, `bottom` fastest, and each level restarts at the
// value of the level above it. The cursor is O(top) words.

#include <cstdint>
#include <vector>

#include "parttree/bounds.hpp"
#include "parttree/types.hpp"

namespace parttree::detail {

class JOdometer {
public:
    /// Positions the cursor on the first valid assignment of
    /// j[bottom..top] (all zeros). Requires 1 <= bottom <= top_level.
    JOdometer(PartitionSpec spec, std::uint64_t bottom)
        : spec_(spec),
          top_(spec.top_level()),
          bottom_(bottom),
          j_(top_ + 1, 0),
          rem_(top_ + 2, 0) {
        if (bottom_ < 1 || bottom_ > top_)
            throw std::domain_error("JOdometer: bottom level out of range");
        rem_[top_ + 1] = spec_.k();
        for (std::uint64_t a = top_; a >= bottom_; --a) {
            j_[a] = (a == top_) ? 0 : j_[a + 1];
            rem_[a] = rem_[a + 1] - j_[a];
        }
    }

    bool done() const noexcept { return done_; }
    std::uint64_t top() const noexcept { return top_; }
    std::uint64_t bottom() const noexcept { return bottom_; }

    /// Shift fixed at `level` (bottom <= level <= top).
    std::uint64_t value(std::uint64_t level) const noexcept { return j_[level]; }

    /// Excess not yet consumed at or above `level`: k - sum(j[level..top]).
    std::uint64_t remaining(std::uint64_t level) const noexcept {
        return rem_[level];
    }

    /// Sum of the fixed shifts.
    std::uint64_t shifted() const noexcept { return spec_.k() - rem_[bottom_]; }

    /// Shifts indexed by level; entries outside [bottom, top] are zero.
    const std::vector<std::uint64_t>& values_by_level() const noexcept {
        return j_;
    }

    /// Largest admissible shift at `level` given the current values above.
    std::uint64_t bound(std::uint64_t level) const {
        return level_bound(spec_, level, spec_.k() - rem_[level + 1]);
    }

    /// Steps to the next assignment in canonical order. Every level reset
    /// lands inside a nonempty range: j[a] <= floor(r/(a+1)) guarantees
    /// floor((r - j[a])/a) >= j[a] one level down.
    void advance() {
        for (std::uint64_t a = bottom_;; ++a) {
            if (a > top_) {
                done_ = true;
                return;
            }
            if (j_[a] + 1 <= bound(a)) {
                ++j_[a];
                rem_[a] = rem_[a + 1] - j_[a];
                for (std::uint64_t b = a; b-- > bottom_;) {
                    j_[b] = j_[b + 1];
                    rem_[b] = rem_[b + 1] - j_[b];
                }
                return;
            }
        }
    }

private:
    PartitionSpec spec_;
    std::uint64_t top_;
    std::uint64_t bottom_;
    std::vector<std::uint64_t> j_;
    std::vector<std::uint64_t> rem_;  // rem_[a] = k - sum(j[a..top])
    bool done_ = false;
};

}  // namespace parttree::detail
