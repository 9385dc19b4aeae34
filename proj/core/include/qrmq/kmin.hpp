// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qrmq/cost_ledger.hpp"
#include "qrmq/oracle_array.hpp"
#include "qrmq/qcost.hpp"

namespace qrmq {

struct KMinResult {
  /// Selected positions, in selection order (ascending (value, index) when no
  /// failure was injected).
  std::vector<std::uint64_t> indices;
  CostLedger ledger_snapshot;
  std::uint64_t ops_issued = 0;
};

/// Indices of the k smallest elements by repeated global minimum + point
/// assign of +inf, on a structure declared with operation budget 2k. Issues
/// exactly 2k operations.
KMinResult find_k_minima(const OracleArray& arr, std::uint64_t k, double eps,
                         FindminConfig cfg = {});

/// One seeded run with failure injection forced on; true iff the returned
/// index set matches the brute-force k smallest. Wrong indices are carried
/// forward undetected, so per-trial success is statistical, at least 1 - eps.
bool kmin_success_trial(const OracleArray& arr, std::uint64_t k, double eps, std::uint64_t seed);

}  // namespace qrmq
