// SPDX-License-Identifier: Apache-2.0
#include "qrmq/kmin.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qrmq/rng.hpp"
#include "qrmq/workloads.hpp"

using namespace qrmq;

namespace {

OracleArray make(std::initializer_list<std::uint64_t> xs) {
  std::vector<Value> v;
  for (std::uint64_t x : xs) v.push_back(Value::finite(x));
  return OracleArray(std::move(v));
}

}  // namespace

TEST_CASE("two smallest of a small array, in order") {
  OracleArray arr = make({3, 1, 4, 1, 5});
  KMinResult res = find_k_minima(arr, 2, 0.1);
  CHECK(res.indices == std::vector<std::uint64_t>{2, 4});
  CHECK(res.ops_issued == 4);
  CHECK(res.ledger_snapshot.failures_injected == 0);
  CHECK(res.ledger_snapshot.classical_reads == 0);
  CHECK(res.ledger_snapshot.quantum_queries > 0);
}

TEST_CASE("k equal to one returns the global argmin") {
  OracleArray arr = make({9, 5, 7, 5, 8});
  KMinResult res = find_k_minima(arr, 1, 0.25);
  CHECK(res.indices == std::vector<std::uint64_t>{2});  // tie 5@2 vs 5@4 -> 2
  CHECK(res.ops_issued == 2);
}

TEST_CASE("all-equal array selects every index in position order") {
  std::vector<Value> v(16, Value::finite(2));
  OracleArray arr(std::move(v));
  KMinResult res = find_k_minima(arr, 16, 0.1);
  std::vector<std::uint64_t> want(16);
  for (std::uint64_t i = 0; i < 16; ++i) want[i] = i + 1;
  CHECK(res.indices == want);
  CHECK(res.ops_issued == 32);
}

TEST_CASE("k out of range is rejected") {
  OracleArray arr = make({1, 2, 3});
  CHECK_THROWS_AS(find_k_minima(arr, 0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(find_k_minima(arr, 4, 0.1), std::invalid_argument);
}

TEST_CASE("ordered equality with the brute reference, duplicates included") {
  std::mt19937_64 g(61);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t n = 1 + uniform_below(g, 64);
    // Half the trials draw from a tiny value set to force heavy duplication.
    std::uint64_t range = trial % 2 == 0 ? 3 : 1 << 16;
    OracleArray arr = generate_array(n, range, g());
    std::uint64_t k = 1 + uniform_below(g, n);
    KMinResult res = find_k_minima(arr, k, 0.1);
    BruteForceArray brute(arr);
    CHECK(res.indices == brute.k_smallest(k));
    CHECK(res.ops_issued == 2 * k);
    auto uniq = res.indices;
    std::ranges::sort(uniq);
    CHECK(std::adjacent_find(uniq.begin(), uniq.end()) == uniq.end());
  }
}

TEST_CASE("success trials are exact when the failure budget vanishes") {
  OracleArray arr = generate_array(128, 1 << 12, 5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(kmin_success_trial(arr, 8, 1e-9, seed));
  }
}

TEST_CASE("a generous failure budget eventually corrupts a trial") {
  OracleArray arr = generate_array(64, 1 << 12, 6);
  bool saw_false = false;
  for (std::uint64_t seed = 0; seed < 150 && !saw_false; ++seed) {
    saw_false = !kmin_success_trial(arr, 16, 0.99, seed);
  }
  CHECK(saw_false);
}
