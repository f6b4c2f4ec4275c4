#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "parttree/bounds.hpp"
#include "parttree/detail/odometer.hpp"
#include "parttree/oracle.hpp"
#include "parttree/types.hpp"

using namespace parttree;

namespace {

// Shift values of a real row, indexed by level (index 0 unused): the part
// at position a equals 1 + j[a] for every tree level a.
std::vector<std::uint64_t> shifts_of_row(const PartitionSpec& spec,
                                         const Partition& row) {
    std::vector<std::uint64_t> j(spec.top_level() + 1, 0);
    for (std::uint64_t a = 1; a <= spec.top_level(); ++a)
        j[a] = row[a] - 1;
    return j;
}

}  // namespace

TEST_CASE("spec validation and derived quantities") {
    CHECK_THROWS_AS(PartitionSpec(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec(0, 0), std::invalid_argument);

    const PartitionSpec spec(10, 3);
    CHECK(spec.n() == 10);
    CHECK(spec.m() == 3);
    CHECK(spec.k() == 7);
    CHECK(PartitionSpec(7, 7).k() == 0);
}

TEST_CASE("regime split: boundary m == k is Plus") {
    CHECK(regime(PartitionSpec(10, 3)) == Regime::minus);  // k = 7
    CHECK(regime(PartitionSpec(8, 4)) == Regime::plus);    // k = m = 4
    CHECK(regime(PartitionSpec(5, 5)) == Regime::plus);    // k = 0
    CHECK(regime(PartitionSpec(9, 4)) == Regime::minus);   // k = 5
    CHECK(regime(PartitionSpec(9, 5)) == Regime::plus);    // k = 4
}

TEST_CASE("top level and tree existence") {
    CHECK(PartitionSpec(10, 3).top_level() == 2);   // minus: m - 1
    CHECK(PartitionSpec(8, 4).top_level() == 3);    // plus: k - 1
    CHECK(PartitionSpec(5, 5).top_level() == 0);    // k = 0
    CHECK(PartitionSpec(6, 5).top_level() == 0);    // k = 1
    CHECK(PartitionSpec(10, 1).top_level() == 0);   // m = 1
    CHECK(PartitionSpec(10, 2).top_level() == 1);   // minus, no tree
    CHECK(PartitionSpec(10, 3).has_tree());
    CHECK(PartitionSpec(8, 4).has_tree());
    CHECK_FALSE(PartitionSpec(10, 2).has_tree());
    CHECK_FALSE(PartitionSpec(8, 6).has_tree());  // plus, k = 2
}

TEST_CASE("partition validity checks") {
    const PartitionSpec spec(7, 3);
    CHECK(is_valid_partition(spec, {5, 1, 1}));
    CHECK(is_valid_partition(spec, {3, 2, 2}));
    CHECK_FALSE(is_valid_partition(spec, {5, 1}));        // size
    CHECK_FALSE(is_valid_partition(spec, {5, 1, 1, 0}));  // size
    CHECK_FALSE(is_valid_partition(spec, {5, 2, 0}));     // zero part
    CHECK_FALSE(is_valid_partition(spec, {1, 5, 1}));     // order
    CHECK_FALSE(is_valid_partition(spec, {4, 2, 2}));     // sum
}

TEST_CASE("minus root bound is floor(n/m) - 1") {
    CHECK(jmax_minus_root(PartitionSpec(10, 3)) == 2);
    CHECK(jmax_minus_root(PartitionSpec(9, 3)) == 2);
    CHECK(jmax_minus_root(PartitionSpec(7, 3)) == 1);

    CHECK_THROWS_AS(jmax_minus_root(PartitionSpec(8, 4)), std::domain_error);
    CHECK_THROWS_AS(jmax_minus_root(PartitionSpec(5, 1)), std::domain_error);

    // The two printed forms of the root bound agree: floor(n/m) - 1 and
    // floor((m + k)/m) - 1 are the same expression once n = m + k.
    for (std::uint64_t n = 5; n <= 40; ++n) {
        for (std::uint64_t m = 2; m <= n; ++m) {
            const PartitionSpec spec(n, m);
            if (spec.regime() != Regime::minus)
                continue;
            CHECK(jmax_minus_root(spec) == (spec.m() + spec.k()) / spec.m() - 1);
            CHECK(jmax_minus_root(spec) == n / m - 1);
        }
    }
}

TEST_CASE("minus bounds below the root") {
    {
        const PartitionSpec spec(7, 3);  // k = 4
        CHECK(jmax_minus(spec, 1, JPath::from_values(spec, {0})) == 2);
    }
    {
        const PartitionSpec spec(10, 3);  // k = 7
        CHECK(jmax_minus(spec, 1, JPath::from_values(spec, {2})) == 2);
    }
    {
        // k = 6 spread over levels 2, 1 and bin 0: floor(6/3) = 2. The
        // rows of (10, 4) with j[3] = 0 confirm: no third part exceeds 3.
        const PartitionSpec spec(10, 4);
        CHECK(jmax_minus(spec, 2, JPath::from_values(spec, {0})) == 2);
        std::uint64_t largest = 0;
        for (const Partition& row : oracle::brute_enumerate(10, 4))
            if (row[3] == 1)
                largest = std::max(largest, row[2] - 1);
        CHECK(largest == 2);
    }
}

TEST_CASE("plus bounds: root is constant 1, lower levels divide the rest") {
    {
        const PartitionSpec spec(6, 3);  // k = 3
        CHECK(jmax_plus(spec, 1, JPath::from_values(spec, {0})) == 1);
        CHECK(level_bound(spec, spec.top_level(), 0) == 1);
    }
    {
        const PartitionSpec spec(8, 4);  // k = 4, top level 3
        CHECK(jmax_plus(spec, 2, JPath::from_values(spec, {1})) == 1);
        CHECK(jmax_plus(spec, 1, JPath::from_values(spec, {0, 1})) == 1);
        CHECK(level_bound(spec, spec.top_level(), 0) == 1);
    }
}

TEST_CASE("bound functions reject wrong regime, level, or suffix shape") {
    const PartitionSpec minus(10, 4);
    const PartitionSpec plus(8, 4);

    CHECK_THROWS_AS(jmax_minus(plus, 1, JPath::from_values(plus, {0, 0})),
                    std::domain_error);
    CHECK_THROWS_AS(jmax_plus(minus, 1, JPath::from_values(minus, {0, 0})),
                    std::domain_error);

    // levels out of range (minus: 1..m-2, plus: 1..k-2)
    CHECK_THROWS_AS(jmax_minus(minus, 0, JPath::from_values(minus, {0})),
                    std::domain_error);
    CHECK_THROWS_AS(jmax_minus(minus, 3, JPath::from_values(minus, {0})),
                    std::domain_error);
    CHECK_THROWS_AS(jmax_plus(plus, 3, JPath::from_values(plus, {0})),
                    std::domain_error);

    // suffix must fix exactly the levels above the queried one
    CHECK_THROWS_AS(jmax_minus(minus, 1, JPath::from_values(minus, {0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(jmax_minus(minus, 2, JPath::from_values(minus, {0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(jmax_minus(minus, 2, JPath(minus)), std::invalid_argument);
    CHECK_THROWS_AS(
        jmax_minus(minus, 2, JPath::from_values(PartitionSpec(11, 4), {0})),
        std::invalid_argument);
}

TEST_CASE("jpath records levels downward and enforces bounds") {
    const PartitionSpec spec(10, 4);  // minus, k = 6, levels 3..1
    JPath path(spec);
    CHECK(path.empty());
    CHECK_FALSE(path.complete());

    path.push(1);  // j[3], root bound floor(10/4) - 1 = 1
    CHECK(path.lowest_level() == 3);
    CHECK(path.at_level(3) == 1);
    CHECK_THROWS_AS(path.push(0), std::domain_error);  // below j[3]
    path.push(1);                                      // j[2] in 1..1
    CHECK(path.sum() == 2);
    CHECK_THROWS_AS(path.push(3), std::domain_error);  // j[1] bound is 2
    path.push(2);
    CHECK(path.complete());
    CHECK(path.values() == std::vector<std::uint64_t>{1, 1, 2});
    CHECK_THROWS_AS(path.push(0), std::domain_error);  // already complete
    CHECK_THROWS_AS(path.at_level(0), std::out_of_range);

    path.pop();
    CHECK(path.lowest_level() == 2);
    CHECK(path.sum() == 2);

    CHECK_THROWS_AS(JPath::from_values(spec, {2}), std::domain_error);
    CHECK_THROWS_AS(JPath(spec).pop(), std::domain_error);
    // degenerate instances have complete empty paths; nothing to push
    CHECK(JPath(PartitionSpec(5, 5)).complete());
    CHECK_THROWS_AS(JPath(PartitionSpec(5, 5)).push(0), std::domain_error);
}

TEST_CASE("rows from completed paths") {
    {
        const PartitionSpec spec(7, 3);  // minus, all shifts zero
        const JPath path = JPath::from_values(spec, {0, 0});
        CHECK(row_from_jpath(path) == Partition{5, 1, 1});
    }
    {
        const PartitionSpec spec(6, 3);  // plus, k = 3: j[2] = 0, j[1] = 1
        const JPath path = JPath::from_values(spec, {0, 1});
        CHECK(row_from_jpath(path) == Partition{3, 2, 1});
    }
    {
        const PartitionSpec spec(7, 5);  // plus, k = 2: j[1] = 1
        const JPath path = JPath::from_values(spec, {1});
        CHECK(row_from_jpath(path) == Partition{2, 2, 1, 1, 1});
    }
    // single-row instances map from the empty path
    CHECK(row_from_jpath(JPath(PartitionSpec(9, 1))) == Partition{9});
    CHECK(row_from_jpath(JPath(PartitionSpec(5, 5))) ==
          Partition{1, 1, 1, 1, 1});
    CHECK(row_from_jpath(JPath(PartitionSpec(6, 5))) ==
          Partition{2, 1, 1, 1, 1});

    // incomplete paths are rejected
    const PartitionSpec spec(10, 4);
    CHECK_THROWS_AS(row_from_jpath(JPath::from_values(spec, {0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(row_from_jpath(JPath(spec)), std::invalid_argument);
}

TEST_CASE("every walked path yields a valid row, and ranges never go empty") {
    std::uint64_t rows = 0;
    std::uint64_t bad_rows = 0;
    std::uint64_t empty_ranges = 0;
    for (std::uint64_t n = 1; n <= 40; ++n) {
        for (std::uint64_t m = 1; m <= n; ++m) {
            const PartitionSpec spec(n, m);
            if (spec.top_level() < 1) {
                if (!is_valid_partition(spec, row_from_jpath(JPath(spec))))
                    ++bad_rows;
                ++rows;
                continue;
            }
            for (detail::JOdometer odo(spec, 1); !odo.done(); odo.advance()) {
                for (std::uint64_t a = 1; a < spec.top_level(); ++a)
                    if (odo.bound(a) < odo.value(a + 1))
                        ++empty_ranges;
                if (!is_valid_partition(
                        spec, detail::build_row(spec, odo.values_by_level(),
                                                odo.shifted())))
                    ++bad_rows;
                ++rows;
            }
        }
    }
    CHECK(rows > 200000);  // all partitions of every n <= 40
    CHECK(bad_rows == 0);
    CHECK(empty_ranges == 0);
}

TEST_CASE("row_from_jpath over a full depth-first walk matches the counts") {
    for (std::uint64_t n = 3; n <= 18; ++n) {
        for (std::uint64_t m = 1; m <= n; ++m) {
            const PartitionSpec spec(n, m);
            std::uint64_t rows = 0;
            std::uint64_t bad = 0;
            JPath path(spec);
            // explicit push/pop walk of the whole tree
            auto walk = [&](auto&& self) -> void {
                if (path.complete()) {
                    if (!is_valid_partition(spec, row_from_jpath(path)))
                        ++bad;
                    ++rows;
                    return;
                }
                const std::uint64_t level = spec.top_level() - path.size();
                const std::uint64_t lo = path.empty() ? 0 : path.values().back();
                const std::uint64_t hi = level_bound(spec, level, path.sum());
                for (std::uint64_t j = lo; j <= hi; ++j) {
                    path.push(j);
                    self(self);
                    path.pop();
                }
            };
            walk(walk);
            CHECK(bad == 0);
            CHECK(rows == oracle::brute_enumerate(n, m).size());
        }
    }
}

TEST_CASE("bounds equal the largest shift any real row achieves") {
    // Independent restatement of the bound definition: group the brute-force
    // rows by their shift suffix above a level; the bound at that level must
    // equal the largest shift observed in the group.
    for (std::uint64_t n = 4; n <= 25; ++n) {
        for (std::uint64_t m = 1; m <= n; ++m) {
            const PartitionSpec spec(n, m);
            if (!spec.has_tree())
                continue;
            const std::uint64_t top = spec.top_level();
            std::vector<std::vector<std::uint64_t>> all_shifts;
            for (const Partition& row : oracle::brute_enumerate(n, m))
                all_shifts.push_back(shifts_of_row(spec, row));
            for (std::uint64_t a = 1; a + 1 <= top; ++a) {
                std::map<std::vector<std::uint64_t>, std::uint64_t> largest;
                for (const auto& j : all_shifts) {
                    std::vector<std::uint64_t> key(j.begin() + a + 1,
                                                   j.begin() + top + 1);
                    auto [it, fresh] = largest.try_emplace(key, j[a]);
                    if (!fresh)
                        it->second = std::max(it->second, j[a]);
                }
                for (const auto& [key, max_shift] : largest) {
                    const std::vector<std::uint64_t> root_first(key.rbegin(),
                                                                key.rend());
                    const JPath suffix = JPath::from_values(spec, root_first);
                    const std::uint64_t bound =
                        spec.regime() == Regime::minus
                            ? jmax_minus(spec, a, suffix)
                            : jmax_plus(spec, a, suffix);
                    CHECK(bound == max_shift);
                }
            }
        }
    }
}
