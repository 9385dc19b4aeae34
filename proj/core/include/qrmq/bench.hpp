// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace qrmq {

/// Ledger counts from one (n, q, seed) cell: the lazy quantum structure and
/// the eager classical baseline run the same generated workload. Baseline
/// cost proxy: n oracle reads at construction plus node visits per op.
struct BenchRow {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_reads = 0;
  std::uint64_t findmin_calls = 0;
  std::uint64_t failures_injected = 0;
  std::uint64_t baseline_init_reads = 0;
  std::uint64_t baseline_node_visits = 0;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

inline constexpr std::string_view kBenchCsvHeader =
    "n,q,eps,seed,quantum_queries,classical_reads,findmin_calls,failures_injected,"
    "baseline_init_reads,baseline_node_visits";

/// Runs one cell with failure injection off. q must not exceed n.
BenchRow run_bench_cell(std::uint64_t n, std::uint64_t q, double eps, std::uint64_t seed);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);
std::vector<BenchRow> parse_bench_csv(std::istream& in);

enum class FitAxis : std::uint8_t { q, n };

struct FitReport {
  FitAxis axis = FitAxis::q;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

/// Ordinary least squares of log(quantum_queries) against log(axis value),
/// averaging the log across seeds at each distinct axis value first. Needs at
/// least 4 distinct axis values.
FitReport fit_log_log(const std::vector<BenchRow>& rows, FitAxis axis);

}  // namespace qrmq
