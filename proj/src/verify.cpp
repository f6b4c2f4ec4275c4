#include "parttree/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "parttree/counting.hpp"
#include "parttree/enumerate.hpp"
#include "parttree/oracle.hpp"

namespace parttree {

namespace detail {

VerifyReport run_verify_with(std::uint64_t n_max, const CountFn& counter) {
    if (n_max < 1)
        throw std::invalid_argument("run_verify: n_max must be >= 1");
    const std::uint64_t enum_cap = std::min<std::uint64_t>(n_max, 30);
    VerifyReport report;
    std::ostringstream out;

    {  // per-m counts against the DP recurrence
        oracle::DpTable dp(n_max);
        std::uint64_t cells = 0;
        bool ok = true;
        for (std::uint64_t n = 1; n <= n_max && ok; ++n) {
            for (std::uint64_t m = 1; m <= n; ++m) {
                const PartitionSpec spec(n, m);
                const Count got = counter(spec);
                if (got != dp.count(n, m)) {
                    out << "counts-vs-dp    n<=" << n_max << ": FAIL at n=" << n
                        << " m=" << m << " (tree=" << got
                        << " dp=" << dp.count(n, m) << ")\n";
                    ok = false;
                    break;
                }
                ++cells;
            }
        }
        if (ok)
            out << "counts-vs-dp    n<=" << n_max << ": ok (" << cells
                << " cells)\n";
        report.ok = report.ok && ok;

        // totals against the DP row sums
        ok = true;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            if (count_all(n) != dp.total(n)) {
                out << "totals-vs-dp    n<=" << n_max << ": FAIL at n=" << n
                    << " (tree=" << count_all(n) << " dp=" << dp.total(n)
                    << ")\n";
                ok = false;
                break;
            }
        }
        if (ok)
            out << "totals-vs-dp    n<=" << n_max << ": ok\n";
        report.ok = report.ok && ok;
    }

    {  // streamed rows against the counts
        std::uint64_t rows = 0;
        bool ok = true;
        for (std::uint64_t n = 1; n <= enum_cap && ok; ++n) {
            for (std::uint64_t m = 1; m <= n && ok; ++m) {
                const PartitionSpec spec(n, m);
                Count seen = 0;
                PartitionStream stream(spec);
                while (auto row = stream.next()) {
                    if (!is_valid_partition(spec, *row)) {
                        out << "rows-vs-counts  n<=" << enum_cap
                            << ": FAIL at n=" << n << " m=" << m
                            << " (invalid row)\n";
                        ok = false;
                        break;
                    }
                    ++seen;
                    ++rows;
                }
                if (ok && seen != counter(spec)) {
                    out << "rows-vs-counts  n<=" << enum_cap
                        << ": FAIL at n=" << n << " m=" << m << " (rows=" << seen
                        << " count=" << counter(spec) << ")\n";
                    ok = false;
                }
            }
        }
        if (ok)
            out << "rows-vs-counts  n<=" << enum_cap << ": ok (" << rows
                << " rows)\n";
        report.ok = report.ok && ok;
    }

    {  // node counts against visited prefixes
        std::uint64_t levels = 0;
        bool ok = true;
        for (std::uint64_t n = 1; n <= enum_cap && ok; ++n) {
            for (std::uint64_t m = 1; m <= n && ok; ++m) {
                const PartitionSpec spec(n, m);
                if (!spec.has_tree())
                    continue;
                if (node_count(spec, 1).count != counter(spec)) {
                    out << "nodes-vs-visits n<=" << enum_cap
                        << ": FAIL at n=" << n << " m=" << m
                        << " (level-1 nodes != count)\n";
                    ok = false;
                    break;
                }
                for (std::uint64_t a = 1; a + 1 <= spec.top_level(); ++a) {
                    if (node_count(spec, a).count != visit_prefixes(spec, a).count) {
                        out << "nodes-vs-visits n<=" << enum_cap
                            << ": FAIL at n=" << n << " m=" << m
                            << " level=" << a << "\n";
                        ok = false;
                        break;
                    }
                    ++levels;
                }
            }
        }
        if (ok)
            out << "nodes-vs-visits n<=" << enum_cap << ": ok (" << levels
                << " levels)\n";
        report.ok = report.ok && ok;
    }

    out << (report.ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
    report.text = out.str();
    return report;
}

}  // namespace detail

VerifyReport run_verify(std::uint64_t n_max) {
    return detail::run_verify_with(
        n_max, [](const PartitionSpec& spec) { return count_parts(spec); });
}

}  // namespace parttree
