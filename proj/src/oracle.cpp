#include "parttree/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace parttree::oracle {

DpTable::DpTable(std::uint64_t n_max)
    : n_max_(n_max), cells_((n_max + 1) * (n_max + 1)) {
    at(0, 0) = 1;
    for (std::uint64_t n = 1; n <= n_max_; ++n)
        for (std::uint64_t m = 1; m <= n; ++m)
            at(n, m) = at(n - 1, m - 1) + at(n - m, m);
}

const Count& DpTable::count(std::uint64_t n, std::uint64_t m) const {
    if (n > n_max_ || m > n_max_)
        throw std::out_of_range("DpTable::count: beyond table size");
    return at(n, m);
}

Count DpTable::total(std::uint64_t n) const {
    if (n > n_max_)
        throw std::out_of_range("DpTable::total: beyond table size");
    Count sum = (n == 0) ? Count(1) : Count(0);
    for (std::uint64_t m = 1; m <= n; ++m)
        sum += at(n, m);
    return sum;
}

Count dp_count(std::uint64_t n, std::uint64_t m) {
    if (m > n)
        return 0;
    return DpTable(n).count(n, m);
}

Count dp_total(std::uint64_t n) {
    return DpTable(n).total(n);
}

namespace {

void gen(std::uint64_t n, std::uint64_t m, std::uint64_t max_part,
         Partition& acc, std::vector<Partition>& out) {
    if (m == 0) {
        if (n == 0)
            out.push_back(acc);
        return;
    }
    if (n < m)
        return;
    for (std::uint64_t p = std::min(max_part, n + 1 - m); p >= 1 && p * m >= n; --p) {
        acc.push_back(p);
        gen(n - p, m - 1, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> brute_enumerate(std::uint64_t n, std::uint64_t m) {
    if (n > kBruteLimit)
        throw std::domain_error("brute_enumerate: n above the guard limit");
    std::vector<Partition> out;
    Partition acc;
    gen(n, m, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace parttree::oracle
