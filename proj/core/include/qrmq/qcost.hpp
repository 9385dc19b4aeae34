// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "qrmq/cost_ledger.hpp"
#include "qrmq/oracle_array.hpp"
#include "qrmq/value.hpp"

namespace qrmq {

/// Knobs for the simulated minimum-finding subroutine.
struct FindminConfig {
  /// Leading constant of the charge formula.
  double charge_constant = 1.0;
  /// When true, each call fails with probability exactly eps (never for
  /// single-element ranges, where the answer cannot be wrong).
  bool failure_injection = false;
  /// Seed for the failure stream; only read when failure_injection is on.
  std::uint64_t rng_seed = 0;
};

/// Query charge for minimum finding over m elements at error eps:
/// max(1, ceil(C * sqrt(m * ln(1/eps)))).
std::uint64_t charge_formula(std::uint64_t m, double eps, double charge_constant = 1.0);

/// Minimum finding with a cost model instead of gates. The returned pair is
/// the true (value, index) minimum with index as tie-break, found by plain
/// exhaustion; only the ledger pretends otherwise.
class FindminSimulator {
 public:
  explicit FindminSimulator(FindminConfig config = {});

  /// Minimum of arr[l..r] (1-based, inclusive). Adds the analytic charge to
  /// ledger.quantum_queries and bumps findmin_calls; the exhaustive scan that
  /// produces the answer is not metered. With failure injection on, with
  /// probability eps the result index is instead uniform over the non-minimum
  /// positions and failures_injected is bumped.
  ValueIndexPair run(const OracleArray& arr, std::uint64_t l, std::uint64_t r, double eps,
                     CostLedger& ledger);

  const FindminConfig& config() const { return config_; }

 private:
  FindminConfig config_;
  std::mt19937_64 rng_;
};

}  // namespace qrmq
