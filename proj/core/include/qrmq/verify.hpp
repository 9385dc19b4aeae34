// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>

#include "qrmq/workloads.hpp"

namespace qrmq {

/// Violation counts from one workload replayed against three implementations:
/// the lazy quantum structure, the eager classical tree, and the brute-force
/// reference (ground truth).
struct TrialOutcome {
  std::uint64_t ops = 0;
  std::uint64_t quantum_mismatches = 0;
  std::uint64_t classical_mismatches = 0;
  std::uint64_t structural_violations = 0;
  std::uint64_t freshness_violations = 0;
  std::uint64_t accounting_violations = 0;
  std::uint64_t init_violations = 0;

  bool clean() const {
    return quantum_mismatches == 0 && classical_mismatches == 0 && structural_violations == 0 &&
           freshness_violations == 0 && accounting_violations == 0 && init_violations == 0;
  }
  TrialOutcome& operator+=(const TrialOutcome& o);
};

/// Replays the workload with failure injection off and checks, per op: answer
/// equality against brute force; for every node created during the op, that
/// the stored value plus pending ancestor tags reproduces the current
/// brute-force minimum of its span (freshness). Afterwards: structural trace
/// invariants, ledger additivity, and creation-charge correctness.
/// force_fault perturbs the final query answer; it exists so the harness can
/// prove it detects a wrong structure.
TrialOutcome run_differential_trial(const WorkloadSpec& spec, double eps,
                                    bool force_fault = false);

struct SuiteOutcome {
  std::uint64_t trials = 0;
  TrialOutcome totals;
  bool pass() const { return totals.clean(); }
};

/// Seeded batch of trials with n drawn from [1, n_max] (alternating uniform
/// and size-class-uniform so small trees stay represented) and q from [1, n].
/// Progress notes go to log when given.
SuiteOutcome run_differential_suite(std::uint64_t trials, std::uint64_t n_max,
                                    std::uint64_t seed, bool force_fault = false,
                                    std::ostream* log = nullptr);

}  // namespace qrmq
