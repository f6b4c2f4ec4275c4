#include "parttree/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace parttree {

bool is_valid_partition(const PartitionSpec& spec, const Partition& parts) {
    if (parts.size() != spec.m())
        return false;
    std::uint64_t sum = 0;
    std::uint64_t prev = UINT64_MAX;
    for (std::uint64_t p : parts) {
        if (p < 1 || p > prev)
            return false;
        prev = p;
        sum += p;
    }
    return sum == spec.n();
}

std::uint64_t level_bound(const PartitionSpec& spec, std::uint64_t level,
                          std::uint64_t sum_above) {
    const std::uint64_t top = spec.top_level();
    if (level < 1 || level > top)
        throw std::domain_error("level_bound: level out of range");
    if (level == top) {
        if (spec.regime() == Regime::minus)
            return spec.n() / spec.m() - 1;
        return 1;  // the Plus root takes the values 0 and 1 only
    }
    if (sum_above > spec.k())
        throw std::domain_error("level_bound: shifts exceed the excess");
    return (spec.k() - sum_above) / (level + 1);
}

std::uint64_t jmax_minus_root(const PartitionSpec& spec) {
    if (spec.regime() != Regime::minus)
        throw std::domain_error("jmax_minus_root: spec is not in the Minus regime");
    if (spec.m() < 2)
        throw std::domain_error("jmax_minus_root: no root level for m == 1");
    return spec.n() / spec.m() - 1;
}

std::uint64_t jmax_minus(const PartitionSpec& spec, std::uint64_t level,
                         const JPath& suffix) {
    if (spec.regime() != Regime::minus)
        throw std::domain_error("jmax_minus: spec is not in the Minus regime");
    if (spec.m() < 3 || level < 1 || level > spec.m() - 2)
        throw std::domain_error("jmax_minus: level out of range");
    if (suffix.spec() != spec || suffix.empty() ||
        suffix.lowest_level() != level + 1)
        throw std::invalid_argument(
            "jmax_minus: suffix must fix exactly the levels above `level`");
    return (spec.k() - suffix.sum()) / (level + 1);
}

std::uint64_t jmax_plus(const PartitionSpec& spec, std::uint64_t level,
                        const JPath& suffix) {
    if (spec.regime() != Regime::plus)
        throw std::domain_error("jmax_plus: spec is not in the Plus regime");
    if (spec.k() < 3 || level < 1 || level > spec.k() - 2)
        throw std::domain_error("jmax_plus: level out of range");
    if (suffix.spec() != spec || suffix.empty() ||
        suffix.lowest_level() != level + 1)
        throw std::invalid_argument(
            "jmax_plus: suffix must fix exactly the levels above `level`");
    return (spec.k() - suffix.sum()) / (level + 1);
}

JPath JPath::from_values(PartitionSpec spec,
                         const std::vector<std::uint64_t>& root_first) {
    JPath path(spec);
    for (std::uint64_t j : root_first)
        path.push(j);
    return path;
}

std::uint64_t JPath::at_level(std::uint64_t level) const {
    if (values_.empty() || level > top_level() || level < lowest_level())
        throw std::out_of_range("JPath::at_level: level not recorded");
    return values_[top_level() - level];
}

void JPath::push(std::uint64_t j) {
    if (complete())
        throw std::domain_error("JPath::push: path is already complete");
    const std::uint64_t level = top_level() - values_.size();
    const std::uint64_t lower = values_.empty() ? 0 : values_.back();
    const std::uint64_t upper = level_bound(spec_, level, sum_);
    if (j < lower || j > upper)
        throw std::domain_error("JPath::push: value outside the admissible range");
    values_.push_back(j);
    sum_ += j;
}

void JPath::pop() {
    if (values_.empty())
        throw std::domain_error("JPath::pop: path is empty");
    sum_ -= values_.back();
    values_.pop_back();
}

Partition row_from_jpath(const JPath& path) {
    if (!path.complete())
        throw std::invalid_argument("row_from_jpath: path does not reach level 1");
    const PartitionSpec& spec = path.spec();
    const std::uint64_t top = spec.top_level();
    std::vector<std::uint64_t> by_level(top + 1, 0);
    for (std::uint64_t a = 1; a <= top; ++a)
        by_level[a] = path.at_level(a);
    return detail::build_row(spec, by_level, path.sum());
}

namespace detail {

Partition build_row(const PartitionSpec& spec,
                    const std::vector<std::uint64_t>& j_by_level,
                    std::uint64_t shifted_total) {
    const std::uint64_t m = spec.m();
    const std::uint64_t k = spec.k();
    if (spec.regime() == Regime::minus) {
        if (m == 1)
            return {spec.n()};
        Partition parts(m);
        parts[0] = k + 1 - shifted_total;
        for (std::uint64_t a = 1; a < m; ++a)
            parts[a] = 1 + j_by_level[a];
        return parts;
    }
    if (k == 0)
        return Partition(m, 1);
    Partition parts(m, 1);
    if (k == 1) {
        parts[0] = 2;
        return parts;
    }
    parts[0] = k + 1 - shifted_total;
    for (std::uint64_t a = 1; a < k; ++a)
        parts[a] = 1 + j_by_level[a];
    return parts;
}

}  // namespace detail

}  // namespace parttree
