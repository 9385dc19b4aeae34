// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qrmq/oracle_array.hpp"
#include "qrmq/value.hpp"

namespace qrmq {

/// Recipe for one seeded workload. The modification mix draws among range
/// Add, point Assign (assigns are always single positions), and range
/// Identity by the given weights.
struct WorkloadSpec {
  std::uint64_t n = 1;
  std::uint64_t q = 1;
  double query_fraction = 0.5;
  /// Largest finite value the generators draw; 0 gives an all-zero array,
  /// the maximal-tie stress case.
  std::uint64_t value_range = std::uint64_t{1} << 20;
  double add_weight = 1.0;
  double point_assign_weight = 1.0;
  double range_identity_weight = 0.25;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument unless n >= 1, q <= n, query_fraction is a
/// probability and the weights are non-negative with a positive sum.
void validate(const WorkloadSpec& spec);

struct Op {
  enum class Kind : std::uint8_t { query, modify };
  Kind kind = Kind::query;
  std::uint64_t l = 1;
  std::uint64_t r = 1;
  ModFn fn;  // identity for queries

  friend bool operator==(const Op&, const Op&) = default;
};

using OpSequence = std::vector<Op>;

OracleArray generate_array(std::uint64_t n, std::uint64_t value_range, std::uint64_t seed);

/// Deterministic for a fixed WorkloadSpec. Ranges mix point and uniform endpoints
/// 50/50; wide ranges exercise lazy tags, points mirror the k-minimum load.
OpSequence generate_ops(const WorkloadSpec& spec);

// One op per line: `Q <l> <r>` or `M <l> <r> <modfn-token>`.
void write_ops(const OpSequence& ops, std::ostream& out);
OpSequence parse_ops(std::istream& in, std::uint64_t n);

}  // namespace qrmq
