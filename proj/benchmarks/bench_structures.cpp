// SPDX-License-Identifier: Apache-2.0
//
// Wall-clock throughput of the three implementations on generated workloads.
// The cost-model comparisons live in the CLI's ledger benches; these exist to
// keep the simulation itself honest about real time.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "qrmq/classical_rmq.hpp"
#include "qrmq/oracle_array.hpp"
#include "qrmq/qcost.hpp"
#include "qrmq/quantum_rmq.hpp"
#include "qrmq/workloads.hpp"

namespace {

qrmq::OracleArray make_array(std::uint64_t n) {
  return qrmq::generate_array(n, std::uint64_t{1} << 20, /*seed=*/7);
}

qrmq::OpSequence make_ops(std::uint64_t n, std::uint64_t q) {
  qrmq::WorkloadSpec spec;
  spec.n = n;
  spec.q = q;
  spec.seed = 7;
  return qrmq::generate_ops(spec);
}

void BM_classical_build(benchmark::State& state) {
  auto n = static_cast<std::uint64_t>(state.range(0));
  qrmq::OracleArray arr = make_array(n);
  for (auto _ : state) {
    qrmq::ClassicalSegTree tree(arr);
    benchmark::DoNotOptimize(tree.node(1));
  }
}
BENCHMARK(BM_classical_build)->Range(1 << 10, 1 << 18);

void BM_classical_ops(benchmark::State& state) {
  auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t q = std::min<std::uint64_t>(n, 256);
  qrmq::OracleArray arr = make_array(n);
  qrmq::OpSequence ops = make_ops(n, q);
  for (auto _ : state) {
    qrmq::ClassicalSegTree tree(arr);
    for (const qrmq::Op& op : ops) {
      if (op.kind == qrmq::Op::Kind::query) {
        benchmark::DoNotOptimize(tree.query(op.l, op.r));
      } else {
        tree.modify(op.l, op.r, op.fn);
      }
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ops.size()));
}
BENCHMARK(BM_classical_ops)->Range(1 << 10, 1 << 18);

void BM_quantum_ops(benchmark::State& state) {
  auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t q = std::min<std::uint64_t>(n, 256);
  qrmq::OracleArray arr = make_array(n);
  qrmq::OpSequence ops = make_ops(n, q);
  for (auto _ : state) {
    qrmq::QuantumRmq tree(arr, q, 0.1);
    for (const qrmq::Op& op : ops) {
      if (op.kind == qrmq::Op::Kind::query) {
        benchmark::DoNotOptimize(tree.query(op.l, op.r));
      } else {
        tree.modify(op.l, op.r, op.fn);
      }
    }
    benchmark::DoNotOptimize(tree.ledger());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * ops.size()));
}
BENCHMARK(BM_quantum_ops)->Range(1 << 10, 1 << 18);

void BM_findmin(benchmark::State& state) {
  auto n = static_cast<std::uint64_t>(state.range(0));
  qrmq::OracleArray arr = make_array(n);
  qrmq::FindminSimulator sim;
  qrmq::CostLedger ledger;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim.run(arr, 1, n, 1e-3, ledger));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_findmin)->Range(1 << 10, 1 << 20);

void BM_brute_rmq(benchmark::State& state) {
  auto n = static_cast<std::uint64_t>(state.range(0));
  qrmq::BruteForceArray brute(make_array(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute.rmq(1, n));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_brute_rmq)->Range(1 << 10, 1 << 20);

}  // namespace

BENCHMARK_MAIN();
