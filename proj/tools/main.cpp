// parttree CLI: counting, enumeration, tables, self-verification, and a
// small benchmark, all through the shared-library C interface.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parttree.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int status_error(int status) {
    return usage_error(parttree_status_str(status));
}

// Owns a string returned by the library.
struct CountString {
    char* value = nullptr;
    ~CountString() { parttree_str_free(value); }
};

std::string join(const std::vector<uint64_t>& values, char sep) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out << sep;
        out << values[i];
    }
    return out.str();
}

std::string json_array(const std::vector<uint64_t>& values) {
    return "[" + join(values, ',') + "]";
}

int run_count(uint64_t n, bool has_m, uint64_t m, const std::string& format) {
    CountString count;
    const int status = has_m ? parttree_count_parts(n, m, &count.value)
                             : parttree_count_all(n, &count.value);
    if (status != PARTTREE_OK)
        return status_error(status);
    if (format == "jsonl") {
        std::cout << "{\"n\":" << n;
        if (has_m)
            std::cout << ",\"m\":" << m;
        std::cout << ",\"count\":\"" << count.value << "\"}\n";
    } else if (format == "csv") {
        std::cout << n;
        if (has_m)
            std::cout << ',' << m;
        std::cout << ',' << count.value << "\n";
    } else {
        std::cout << count.value << "\n";
    }
    return kExitOk;
}

int run_enumerate(uint64_t n, bool has_m, uint64_t m, uint64_t limit,
                  const std::string& format) {
    parttree_enum* cursor = nullptr;
    const int status = has_m ? parttree_enum_new(n, m, &cursor)
                             : parttree_enum_new_all(n, &cursor);
    if (status != PARTTREE_OK)
        return status_error(status);

    std::vector<uint64_t> row(n);
    uint64_t emitted = 0;
    int result = kExitOk;
    while (emitted < limit) {
        size_t len = 0;
        const int rc = parttree_enum_next(cursor, row.data(), row.size(), &len);
        if (rc == 0)
            break;
        if (rc != 1) {
            result = status_error(rc);
            break;
        }
        const std::vector<uint64_t> parts(row.begin(), row.begin() + len);
        if (format == "jsonl") {
            std::cout << "{\"n\":" << n << ",\"m\":" << parts.size()
                      << ",\"parts\":" << json_array(parts) << "}\n";
        } else if (format == "csv") {
            std::cout << n << ',' << parts.size() << ',' << join(parts, ' ')
                      << "\n";
        } else {
            std::cout << join(parts, ' ') << "\n";
        }
        ++emitted;
    }
    parttree_enum_free(cursor);
    return result;
}

int run_table(uint64_t n_max, const std::string& format) {
    for (uint64_t n = 1; n <= n_max; ++n) {
        std::vector<std::string> counts;
        counts.reserve(n);
        for (uint64_t m = 1; m <= n; ++m) {
            CountString cell;
            const int status = parttree_count_parts(n, m, &cell.value);
            if (status != PARTTREE_OK)
                return status_error(status);
            counts.emplace_back(cell.value);
        }
        CountString total;
        const int status = parttree_count_all(n, &total.value);
        if (status != PARTTREE_OK)
            return status_error(status);

        std::ostringstream cells;
        for (size_t i = 0; i < counts.size(); ++i) {
            if (i > 0)
                cells << ' ';
            cells << counts[i];
        }
        if (format == "jsonl") {
            std::cout << "{\"n\":" << n << ",\"counts\":[";
            for (size_t i = 0; i < counts.size(); ++i)
                std::cout << (i > 0 ? ",\"" : "\"") << counts[i] << '"';
            std::cout << "],\"total\":\"" << total.value << "\"}\n";
        } else if (format == "csv") {
            std::cout << n << ',' << cells.str() << ',' << total.value << "\n";
        } else {
            std::cout << cells.str() << " | " << total.value << "\n";
        }
    }
    return kExitOk;
}

int run_verify(uint64_t n_max) {
    CountString report;
    const int status = parttree_verify(n_max, &report.value);
    if (status == PARTTREE_OK || status == PARTTREE_EVERIFY) {
        std::cout << report.value;
        return status == PARTTREE_OK ? kExitOk : kExitVerifyFailed;
    }
    return status_error(status);
}

int run_bench(uint64_t n_max, const std::string& format) {
    using clock = std::chrono::steady_clock;
    if (format != "jsonl")
        std::cout << "n,p_n,tree_ns,dp_ns\n";
    for (uint64_t n = 1; n <= n_max; ++n) {
        CountString tree;
        const auto tree_start = clock::now();
        int status = parttree_count_all(n, &tree.value);
        const auto tree_ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() -
                                                                 tree_start)
                .count();
        if (status != PARTTREE_OK)
            return status_error(status);

        CountString dp;
        const auto dp_start = clock::now();
        status = parttree_dp_count_all(n, &dp.value);
        const auto dp_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                               clock::now() - dp_start)
                               .count();
        if (status != PARTTREE_OK)
            return status_error(status);

        if (format == "jsonl") {
            std::cout << "{\"n\":" << n << ",\"p_n\":\"" << tree.value
                      << "\",\"tree_ns\":" << tree_ns << ",\"dp_ns\":" << dp_ns
                      << "}\n";
        } else {
            std::cout << n << ',' << tree.value << ',' << tree_ns << ','
                      << dp_ns << "\n";
        }
    }
    return kExitOk;
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "jsonl", "csv"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integer-partition counting and enumeration"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(parttree_version()));

    uint64_t n = 0;
    uint64_t m = 0;
    uint64_t n_max = 0;
    uint64_t limit = UINT64_MAX;
    std::string format = "text";

    CLI::App* count = app.add_subcommand("count", "Count partitions of n");
    count->add_option("--n", n, "Number to partition")->required();
    CLI::Option* count_m =
        count->add_option("--m", m, "Exact number of parts");
    add_format_option(count, format);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "List partitions row by row");
    enumerate->add_option("--n", n, "Number to partition")->required();
    CLI::Option* enum_m =
        enumerate->add_option("--m", m, "Exact number of parts");
    enumerate->add_option("--limit", limit, "Stop after this many rows");
    add_format_option(enumerate, format);

    CLI::App* table =
        app.add_subcommand("table", "Print the p(n,m) triangle with row sums");
    table->add_option("--n-max", n_max, "Largest n")->required();
    add_format_option(table, format);

    CLI::App* verify =
        app.add_subcommand("verify", "Cross-check the formulas against the "
                                     "independent recurrence");
    verify->add_option("--n-max", n_max, "Largest n to check")->required();

    CLI::App* bench = app.add_subcommand(
        "bench", "Time formula counting against the recurrence");
    bench->add_option("--n-max", n_max, "Largest n to time")->required();
    add_format_option(bench, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (count->parsed()) {
        if (n < 1)
            return usage_error("--n must be >= 1");
        if (count_m->count() > 0 && (m < 1 || m > n))
            return usage_error("--m must satisfy 1 <= m <= n");
        return run_count(n, count_m->count() > 0, m, format);
    }
    if (enumerate->parsed()) {
        if (n < 1)
            return usage_error("--n must be >= 1");
        if (enum_m->count() > 0 && (m < 1 || m > n))
            return usage_error("--m must satisfy 1 <= m <= n");
        return run_enumerate(n, enum_m->count() > 0, m, limit, format);
    }
    if (table->parsed()) {
        if (n_max < 1)
            return usage_error("--n-max must be >= 1");
        return run_table(n_max, format);
    }
    if (verify->parsed()) {
        if (n_max < 1)
            return usage_error("--n-max must be >= 1");
        return run_verify(n_max);
    }
    if (bench->parsed()) {
        if (n_max < 1)
            return usage_error("--n-max must be >= 1");
        return run_bench(n_max, format);
    }
    return usage_error("no command given");
}
