// SPDX-License-Identifier: Apache-2.0
#include "qrmq/kmin.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrmq/quantum_rmq.hpp"

namespace qrmq {

KMinResult find_k_minima(const OracleArray& arr, std::uint64_t k, double eps, FindminConfig cfg) {
  if (k < 1 || k > arr.size()) throw std::invalid_argument("find_k_minima: k out of range");
  QuantumRmq tree(arr, 2 * k, eps, cfg);
  KMinResult result;
  result.indices.reserve(k);
  for (std::uint64_t j = 0; j < k; ++j) {
    ValueIndexPair p = tree.query(1, arr.size());
    result.indices.push_back(p.index);
    tree.modify(p.index, p.index, ModFn::assign(Value::infinity()));
  }
  result.ledger_snapshot = tree.ledger();
  result.ops_issued = tree.ops_processed();
  return result;
}

bool kmin_success_trial(const OracleArray& arr, std::uint64_t k, double eps, std::uint64_t seed) {
  FindminConfig cfg;
  cfg.failure_injection = true;
  cfg.rng_seed = seed;
  KMinResult got = find_k_minima(arr, k, eps, cfg);

  BruteForceArray brute(arr);
  std::vector<std::uint64_t> want = brute.k_smallest(k);
  std::vector<std::uint64_t> have = got.indices;
  std::ranges::sort(want);
  std::ranges::sort(have);
  have.erase(std::unique(have.begin(), have.end()), have.end());
  return have == want;
}

}  // namespace qrmq
