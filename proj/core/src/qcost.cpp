// SPDX-License-Identifier: Apache-2.0
#include "qrmq/qcost.hpp"

#include <cmath>
#include <stdexcept>

#include "qrmq/rng.hpp"

namespace qrmq {

std::uint64_t charge_formula(std::uint64_t m, double eps, double charge_constant) {
  if (m == 0) throw std::invalid_argument("charge_formula: m must be positive");
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument("charge_formula: eps must lie in (0, 1)");
  }
  if (!(charge_constant > 0.0)) {
    throw std::invalid_argument("charge_formula: charge constant must be positive");
  }
  double y = charge_constant * std::sqrt(static_cast<double>(m) * -std::log(eps));
  // Relative slack keeps exact-integer cases (e.g. m = 4, eps = 1/e) from
  // rounding up on a one-ulp overshoot.
  double c = std::ceil(y * (1.0 - 1e-12));
  if (c < 1.0) return 1;
  return static_cast<std::uint64_t>(c);
}

FindminSimulator::FindminSimulator(FindminConfig config)
    : config_(config), rng_(config.rng_seed) {}

ValueIndexPair FindminSimulator::run(const OracleArray& arr, std::uint64_t l, std::uint64_t r,
                                     double eps, CostLedger& ledger) {
  if (l < 1 || r > arr.size() || l > r) {
    throw std::out_of_range("FindminSimulator::run: bad range");
  }
  if (!(eps > 0.0) || !(eps < 1.0)) {
    throw std::invalid_argument("FindminSimulator::run: eps must lie in (0, 1)");
  }
  std::uint64_t m = r - l + 1;
  ledger.findmin_calls += 1;
  ledger.quantum_queries += charge_formula(m, eps, config_.charge_constant);

  auto vals = arr.values();  // direct scan, not metered as oracle reads
  ValueIndexPair best{vals[l - 1], l};
  for (std::uint64_t i = l + 1; i <= r; ++i) {
    best = pair_min(best, ValueIndexPair{vals[i - 1], i});
  }

  if (config_.failure_injection && m > 1 && uniform01(rng_) < eps) {
    ledger.failures_injected += 1;
    // Uniform over [l, r] minus the true minimum.
    std::uint64_t off = uniform_below(rng_, m - 1);
    std::uint64_t wrong = l + off;
    if (wrong >= best.index) wrong += 1;
    return ValueIndexPair{vals[wrong - 1], wrong};
  }
  return best;
}

}  // namespace qrmq
