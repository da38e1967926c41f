#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlii/parallel.hpp"

namespace rlii {

// Percentages are held in hundredths (56.25% -> 5625) so the two-decimal
// truncation rule stays exact. Values can be negative when the run-length
// form is larger than the baseline.
std::int64_t pct_saved_hundredths(std::size_t base_bits, std::size_t ours_bits);

// "5625" -> "56.25", "-1428" -> "-14.28"; always two decimals.
std::string format_pct(std::int64_t hundredths);

struct BenchRow {
    std::string docid;
    std::size_t binary_bits = 0;
    std::size_t gamma_bits = 0;
    std::size_t ours_bits = 0;
    std::int64_t pct_vs_binary = 0;  // hundredths
    std::int64_t pct_vs_gamma = 0;   // hundredths

    bool operator==(const BenchRow&) const = default;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::int64_t avg_vs_binary = 0;  // hundredths, truncated mean
    std::int64_t avg_vs_gamma = 0;
    std::int64_t overall = 0;  // truncated mean of the two averages

    bool operator==(const BenchReport&) const = default;
};

BenchRow bench_docid(std::string_view docid);

// One row per docid; rows are independent, so the parallel mode splits them
// across threads. Inputs are validated up front.
BenchReport bench_table(std::span<const std::string> docids, ExecMode mode = ExecMode::parallel);

struct FixtureOutcome {
    BenchReport report;
    std::vector<std::string> discrepancies;
};

// Built-in five-docid reference fixture with its recorded run-length bit
// counts. Baseline bits are computed live; the discrepancy log flags every
// row whose stored bit count differs from what the codec produces.
FixtureOutcome fixture_report();

std::string render_table(const BenchReport& report);
void write_csv(const BenchReport& report, std::ostream& out);

}  // namespace rlii
