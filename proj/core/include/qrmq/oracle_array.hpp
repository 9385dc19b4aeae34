// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "qrmq/cost_ledger.hpp"
#include "qrmq/value.hpp"

namespace qrmq {

/// The input array a[1..n]. Immutable after construction: structures that price
/// their reads always address the original values, never a modified state.
class OracleArray {
 public:
  explicit OracleArray(std::vector<Value> values);

  std::size_t size() const { return values_.size(); }

  /// Accounted 1-based read; every call costs one classical element read.
  Value read(std::size_t i, CostLedger& ledger) const;

  std::span<const Value> values() const { return values_; }

 private:
  std::vector<Value> values_;
};

// Fixture format: first line "n=<int>", then one value token per line.
OracleArray load_array_fixture(std::istream& in);
void save_array_fixture(const OracleArray& arr, std::ostream& out);

/// Mutable ground-truth copy of the array. Every operation is a linear scan or
/// pointwise loop, which is exactly why its answers are trusted.
class BruteForceArray {
 public:
  explicit BruteForceArray(const OracleArray& arr);
  explicit BruteForceArray(std::vector<Value> values);

  std::size_t size() const { return values_.size(); }

  /// Smallest (value, index) pair over positions l..r, 1-based inclusive.
  ValueIndexPair rmq(std::size_t l, std::size_t r) const;

  void modify(std::size_t l, std::size_t r, const ModFn& f);

  /// Indices of the k lexicographically smallest (value, index) pairs, in
  /// ascending pair order.
  std::vector<std::uint64_t> k_smallest(std::size_t k) const;

  std::span<const Value> values() const { return values_; }

 private:
  void check_range(std::size_t l, std::size_t r) const;

  std::vector<Value> values_;
};

}  // namespace qrmq
