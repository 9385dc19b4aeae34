// SPDX-License-Identifier: Apache-2.0
#include "qrmq/verify.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "qrmq/classical_rmq.hpp"
#include "qrmq/qcost.hpp"
#include "qrmq/quantum_rmq.hpp"
#include "qrmq/rng.hpp"

namespace qrmq {

TrialOutcome& TrialOutcome::operator+=(const TrialOutcome& o) {
  ops += o.ops;
  quantum_mismatches += o.quantum_mismatches;
  classical_mismatches += o.classical_mismatches;
  structural_violations += o.structural_violations;
  freshness_violations += o.freshness_violations;
  accounting_violations += o.accounting_violations;
  init_violations += o.init_violations;
  return *this;
}

namespace {

// Compares every creation event since `mark` against the brute state, which
// must still reflect only the operations before the current one.
void check_freshness(const QuantumRmq& tree, const BruteForceArray& brute, std::size_t& mark,
                     TrialOutcome& out) {
  const auto& events = tree.creation_events();
  for (; mark < events.size(); ++mark) {
    const CreationEvent& ev = events[mark];
    if (ev.span_lo > brute.size()) continue;  // pure padding, nothing to compare
    std::uint64_t hi = std::min<std::uint64_t>(ev.span_hi, brute.size());
    Value expected = brute.rmq(ev.span_lo, hi).value;
    Value got = mod_apply(ev.pending, ev.initial).value;
    if (got != expected) out.freshness_violations += 1;
  }
}

void check_accounting(const QuantumRmq& tree, TrialOutcome& out) {
  const CostLedger& led = tree.ledger();
  if (led.classical_reads != 0) out.accounting_violations += 1;
  if (led.failures_injected != 0) out.accounting_violations += 1;

  std::uint64_t charge_sum = 0;
  std::uint64_t searches = 0;
  for (const CreationEvent& ev : tree.creation_events()) {
    charge_sum += ev.charge;
    if (ev.span_lo > tree.size()) {
      if (ev.charge != 0 || !ev.initial.value.is_infinite()) out.accounting_violations += 1;
      continue;
    }
    searches += 1;
    std::uint64_t m = std::min<std::uint64_t>(ev.span_hi, tree.size()) - ev.span_lo + 1;
    if (ev.charge != charge_formula(m, tree.per_create_error())) out.accounting_violations += 1;
  }
  if (charge_sum != led.quantum_queries) out.accounting_violations += 1;
  if (searches != led.findmin_calls) out.accounting_violations += 1;
  if (tree.creation_events().size() != tree.node_count()) out.accounting_violations += 1;
}

}  // namespace

TrialOutcome run_differential_trial(const WorkloadSpec& spec, double eps, bool force_fault) {
  validate(spec);
  TrialOutcome out;
  OracleArray arr = generate_array(spec.n, spec.value_range, spec.seed);
  OpSequence ops = generate_ops(spec);
  out.ops = ops.size();

  QuantumRmq tree(arr, std::max<std::uint64_t>(spec.q, 1), eps);
  if (tree.ledger() != CostLedger{} || tree.node_count() != 0) out.init_violations += 1;
  ClassicalSegTree base(arr);
  if (base.ledger().classical_reads != spec.n) out.init_violations += 1;
  BruteForceArray brute(arr);

  std::size_t last_query = ops.size();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].kind == Op::Kind::query) last_query = i;
  }

  std::size_t event_mark = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Op& op = ops[i];
    if (op.kind == Op::Kind::query) {
      ValueIndexPair got = tree.query(op.l, op.r);
      check_freshness(tree, brute, event_mark, out);
      ValueIndexPair base_got = base.query(op.l, op.r);
      ValueIndexPair want = brute.rmq(op.l, op.r);
      if (force_fault && i == last_query) got.index += 1;
      if (got != want) out.quantum_mismatches += 1;
      if (base_got != want) out.classical_mismatches += 1;
    } else {
      tree.modify(op.l, op.r, op.fn);
      check_freshness(tree, brute, event_mark, out);
      base.modify(op.l, op.r, op.fn);
      brute.modify(op.l, op.r, op.fn);
    }
  }

  out.structural_violations += validate_traces(tree.traces(), tree.padded_size()).size();
  check_accounting(tree, out);
  return out;
}

SuiteOutcome run_differential_suite(std::uint64_t trials, std::uint64_t n_max, std::uint64_t seed,
                                    bool force_fault, std::ostream* log) {
  if (n_max < 1) n_max = 1;
  std::mt19937_64 g(seed);
  SuiteOutcome suite;
  for (std::uint64_t t = 0; t < trials; ++t) {
    WorkloadSpec spec;
    if (t < 16) {
      spec.n = std::min<std::uint64_t>(t + 1, n_max);  // pin the smallest sizes
    } else if (t % 2 == 0) {
      spec.n = uniform_range(g, 1, n_max);
    } else {
      // Uniform over size classes, then uniform inside the class; keeps small
      // n frequent even when n_max is large.
      std::uint64_t top = static_cast<std::uint64_t>(std::bit_width(n_max)) - 1;
      std::uint64_t bits = uniform_range(g, 0, top);
      std::uint64_t lo = std::uint64_t{1} << bits;
      std::uint64_t hi = std::min<std::uint64_t>(n_max, (lo << 1) - 1);
      spec.n = uniform_range(g, lo, hi);
    }
    spec.q = uniform_range(g, 1, spec.n);
    if (force_fault) spec.query_fraction = 1.0;  // guarantees a query to corrupt
    spec.seed = g();
    TrialOutcome res = run_differential_trial(spec, 0.1, force_fault);
    suite.totals += res;
    suite.trials += 1;
    if (log && !res.clean()) {
      *log << "trial " << t << " (n=" << spec.n << " q=" << spec.q << " seed=" << spec.seed
           << ") found violations\n";
    }
  }
  return suite;
}

}  // namespace qrmq
