// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace qrmq {

/// Monotone run counters. Charged oracle queries are kept apart from plain
/// classical element reads so the two cost models never mix.
struct CostLedger {
  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_reads = 0;
  std::uint64_t findmin_calls = 0;
  std::uint64_t failures_injected = 0;

  CostLedger snapshot() const { return *this; }

  friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

}  // namespace qrmq
