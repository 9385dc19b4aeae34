// SPDX-License-Identifier: Apache-2.0
#include "qrmq/quantum_rmq.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qrmq/classical_rmq.hpp"
#include "qrmq/rng.hpp"
#include "qrmq/verify.hpp"
#include "qrmq/workloads.hpp"

using namespace qrmq;

namespace {

OracleArray make(std::initializer_list<std::uint64_t> xs) {
  std::vector<Value> v;
  for (std::uint64_t x : xs) v.push_back(Value::finite(x));
  return OracleArray(std::move(v));
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::ranges::sort(v);
  return v;
}

}  // namespace

TEST_CASE("node layout arithmetic") {
  CHECK(padded_length(1) == 2);
  CHECK(padded_length(2) == 2);
  CHECK(padded_length(5) == 8);
  CHECK(padded_length(8) == 8);
  CHECK_THROWS_AS(padded_length(0), std::invalid_argument);

  CHECK(tree_layers(8) == 4);
  CHECK(node_layer(1) == 1);
  CHECK(node_layer(12) == 4);
  CHECK(max_node_number(8) == 15);
  CHECK(is_leaf(8, 8));
  CHECK(!is_leaf(7, 8));

  CHECK(node_span(1, 8) == std::pair<std::uint64_t, std::uint64_t>{1, 8});
  CHECK(node_span(2, 8) == std::pair<std::uint64_t, std::uint64_t>{1, 4});
  CHECK(node_span(5, 8) == std::pair<std::uint64_t, std::uint64_t>{3, 4});
  CHECK(node_span(12, 8) == std::pair<std::uint64_t, std::uint64_t>{5, 5});
  CHECK(node_span(15, 8) == std::pair<std::uint64_t, std::uint64_t>{8, 8});
  CHECK_THROWS_AS(node_span(16, 8), std::out_of_range);
  CHECK_THROWS_AS(node_span(0, 8), std::out_of_range);

  // A node's span never exceeds twice the padded length over its number.
  for (std::uint64_t k = 1; k <= 15; ++k) {
    auto [lo, hi] = node_span(k, 8);
    CHECK((hi - lo + 1) * k <= 2 * 8);
  }
}

TEST_CASE("initialization does no work") {
  OracleArray arr = make({3, 1, 4, 1, 5, 9, 2, 6});
  QuantumRmq tree(arr, 16, 0.1);
  CHECK(tree.ledger() == CostLedger{});
  CHECK(tree.node_count() == 0);
  CHECK(tree.traces().empty());
  CHECK(tree.ops_processed() == 0);
  CHECK(tree.per_create_error() == doctest::Approx(0.1 / (4.0 * 16 * 3)).epsilon(1e-12));
  CHECK_THROWS_AS((void)tree.node(1), std::out_of_range);
}

TEST_CASE("construction validates its parameters") {
  OracleArray arr = make({3, 1, 4, 1});
  CHECK_THROWS_AS(QuantumRmq(arr, 0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(QuantumRmq(arr, 9, 0.1), std::invalid_argument);  // 2 * n_padded = 8
  CHECK_NOTHROW(QuantumRmq(arr, 8, 0.1));
  CHECK_THROWS_AS(QuantumRmq(arr, 4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(QuantumRmq(arr, 4, 1.0), std::invalid_argument);
}

TEST_CASE("first whole-range query creates only the root") {
  OracleArray arr = make({3, 1, 4, 1, 5, 9, 2, 6});
  QuantumRmq tree(arr, 4, 0.1);
  CHECK(tree.query(1, 8) == ValueIndexPair{Value::finite(1), 2});
  CHECK(tree.node_count() == 1);
  CHECK(tree.ledger().quantum_queries == 8);  // charge for m=8 at eps/(4*4*3)
  CHECK(tree.ledger().findmin_calls == 1);
  CHECK(tree.ledger().classical_reads == 0);
  REQUIRE(tree.traces().size() == 1);
  CHECK(tree.traces()[0].topdown_node == 1);
  CHECK(tree.traces()[0].lazy_nodes.empty());
  CHECK(tree.traversals()[0].covered == std::vector<std::uint64_t>{1});
  CHECK(tree.traversals()[0].visited.empty());
}

TEST_CASE("warm-root query(2,5) covers {5,9,12} and lazily creates the hand-derived set") {
  OracleArray arr = make({3, 1, 4, 1, 5, 9, 2, 6});
  QuantumRmq tree(arr, 4, 0.1);
  tree.query(1, 8);  // warm the root
  CHECK(tree.query(2, 5) == ValueIndexPair{Value::finite(1), 2});

  REQUIRE(tree.traces().size() == 2);
  const CreationTrace& t = tree.traces()[1];
  CHECK(t.op_index == 2);
  CHECK(t.topdown_node == 2);
  CHECK(t.lazy_nodes == std::vector<std::uint64_t>{3, 4, 5, 6, 7, 8, 9, 12, 13});

  const TraversalRecord& walk = tree.traversals()[1];
  CHECK(sorted(walk.covered) == std::vector<std::uint64_t>{5, 9, 12});
  CHECK(sorted(walk.visited) == std::vector<std::uint64_t>{1, 2, 3, 4, 6});

  std::ostringstream out;
  QuantumRmq::write_traces(tree.traces(), out);
  CHECK(out.str() == "op=1 topdown=1 lazy=\nop=2 topdown=2 lazy=3,4,5,6,7,8,9,12,13\n");
}

TEST_CASE("top-down creation is skipped when the node already exists") {
  OracleArray arr = make({3, 1, 4, 1, 5, 9, 2, 6});
  QuantumRmq tree(arr, 8, 0.1);
  tree.query(1, 8);
  tree.query(2, 5);  // creates nodes 2..13 among others
  std::uint64_t nodes_before = tree.node_count();
  tree.query(1, 8);  // op 3: node 3 already exists
  CHECK(tree.traces()[2].topdown_node == std::nullopt);
  CHECK(tree.traces()[2].lazy_nodes.empty());
  CHECK(tree.node_count() == nodes_before);
}

TEST_CASE("singleton queries answer from the brute state") {
  OracleArray arr = make({3, 1, 4, 1, 5, 9, 2, 6});
  QuantumRmq tree(arr, 8, 0.1);
  CHECK(tree.query(3, 3) == ValueIndexPair{Value::finite(4), 3});
  CHECK(tree.query(7, 7) == ValueIndexPair{Value::finite(2), 7});
}

TEST_CASE("covered-root modify creates nothing lazily") {
  OracleArray arr = make({3, 1, 4, 1, 5, 9, 2, 6});
  QuantumRmq tree(arr, 4, 0.1);
  tree.query(1, 8);
  tree.modify(1, 8, ModFn::add(1));
  REQUIRE(tree.traces().size() == 2);
  CHECK(tree.traces()[1].topdown_node == 2);  // top-down completion still runs
  CHECK(tree.traces()[1].lazy_nodes.empty());
  CHECK(tree.traversals()[1].covered == std::vector<std::uint64_t>{1});
  CHECK(tree.query(1, 8) == ValueIndexPair{Value::finite(2), 2});
}

TEST_CASE("point assign of +inf promotes the second smallest") {
  OracleArray arr = make({5, 3, 8, 1, 9, 2, 7, 6});
  QuantumRmq tree(arr, 4, 0.1);
  tree.modify(4, 4, ModFn::assign(Value::infinity()));
  CHECK(tree.query(1, 8) == ValueIndexPair{Value::finite(2), 6});
  tree.modify(1, 8, ModFn::identity());
  CHECK(tree.query(1, 8) == ValueIndexPair{Value::finite(2), 6});
}

TEST_CASE("bad ranges and exhausted budgets are errors that change nothing") {
  OracleArray arr = make({3, 1, 4, 1});
  QuantumRmq tree(arr, 2, 0.1);
  CHECK_THROWS_AS((void)tree.query(0, 2), std::out_of_range);
  CHECK_THROWS_AS((void)tree.query(1, 5), std::out_of_range);
  CHECK_THROWS_AS(tree.modify(3, 2, ModFn::add(1)), std::out_of_range);
  CHECK(tree.ops_processed() == 0);
  CHECK(tree.node_count() == 0);

  tree.query(1, 4);
  tree.query(2, 3);
  CHECK_THROWS_AS((void)tree.query(1, 4), std::runtime_error);
  CHECK_THROWS_AS(tree.modify(1, 1, ModFn::add(1)), std::runtime_error);
  CHECK(tree.ops_processed() == 2);
  CHECK(tree.traces().size() == 2);
}

TEST_CASE("op indices beyond the last valid node skip top-down creation") {
  OracleArray arr = make({4, 2, 7, 5});
  QuantumRmq tree(arr, 8, 0.1);  // budget 2 * n_padded; max node number is 7
  for (int i = 0; i < 8; ++i) tree.query(1, 1);
  REQUIRE(tree.traces().size() == 8);
  // Op 1 lazily created nodes 2..5 on the way to leaf 4, so the next fresh
  // top-down slots are ops 6 and 7; op 8 is not a node number at all.
  CHECK(tree.traces()[0].topdown_node == 1);
  CHECK(sorted(tree.traces()[0].lazy_nodes) == std::vector<std::uint64_t>{2, 3, 4, 5});
  for (int i = 1; i < 5; ++i) CHECK(tree.traces()[i].topdown_node == std::nullopt);
  CHECK(tree.traces()[5].topdown_node == 6);
  CHECK(tree.traces()[6].topdown_node == 7);
  CHECK(tree.traces()[7].topdown_node == std::nullopt);
  CHECK(tree.node_count() == 7);
}

TEST_CASE("pending ancestor tags compose root-outermost") {
  OracleArray arr = make({3, 1, 4, 1, 5, 9, 2, 6});
  QuantumRmq tree(arr, 8, 0.1);
  tree.query(1, 8);
  tree.modify(1, 8, ModFn::add(5));
  CHECK(tree.pending_tags(4) == ModFn::add(5));  // only the root tag, held above
  CHECK(tree.pending_tags(1) == ModFn::identity());

  tree.query(5, 5);  // pushes the root tag one level down
  CHECK(tree.node(1).g == ModFn::identity());
  CHECK(tree.pending_tags(4) == ModFn::add(5));  // now held at node 2
  CHECK(tree.node(2).g == ModFn::add(5));
}

TEST_CASE("padding nodes are created free and hold +inf") {
  OracleArray arr = make({6, 4, 9, 2, 8});  // padded to 8
  QuantumRmq tree(arr, 4, 0.1);
  CHECK(tree.query(1, 5) == ValueIndexPair{Value::finite(2), 4});
  REQUIRE(tree.has_node(7));   // spans [7,8], pure padding
  REQUIRE(tree.has_node(13));  // spans [6,6], pure padding
  CHECK(tree.node(7).v.value == Value::infinity());
  CHECK(tree.node(13).v.value == Value::infinity());
  for (const CreationEvent& ev : tree.creation_events()) {
    if (ev.span_lo > tree.size()) {
      CHECK(ev.charge == 0);
    } else {
      CHECK(ev.charge >= 1);
    }
  }
  std::uint64_t total = 0;
  for (const CreationEvent& ev : tree.creation_events()) total += ev.charge;
  CHECK(total == tree.ledger().quantum_queries);
}

TEST_CASE("differential equivalence on random workloads") {
  std::mt19937_64 g(47);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint64_t n = 1 + uniform_below(g, 256);
    WorkloadSpec spec;
    spec.n = n;
    spec.q = 1 + uniform_below(g, n);
    spec.seed = g();
    OracleArray arr = generate_array(n, 1 << 10, spec.seed);
    OpSequence ops = generate_ops(spec);

    QuantumRmq tree(arr, spec.q, 0.1);
    BruteForceArray brute(arr);
    for (const Op& op : ops) {
      if (op.kind == Op::Kind::query) {
        CHECK(tree.query(op.l, op.r) == brute.rmq(op.l, op.r));
      } else {
        tree.modify(op.l, op.r, op.fn);
        brute.modify(op.l, op.r, op.fn);
      }
    }
    CHECK(tree.ledger().classical_reads == 0);
    CHECK(validate_traces(tree.traces(), tree.padded_size()).empty());
  }
}

TEST_CASE("full harness reports clean runs across mixed workloads") {
  std::mt19937_64 g(53);
  for (int trial = 0; trial < 40; ++trial) {
    WorkloadSpec spec;
    spec.n = 1 + uniform_below(g, 512);
    spec.q = 1 + uniform_below(g, spec.n);
    spec.query_fraction = 0.25 + 0.5 * uniform01(g);
    spec.seed = g();
    TrialOutcome out = run_differential_trial(spec, 0.1);
    CHECK(out.clean());
    CHECK(out.ops == spec.q);
  }
}

TEST_CASE("the harness notices a corrupted answer") {
  WorkloadSpec spec;
  spec.n = 64;
  spec.q = 32;
  spec.query_fraction = 1.0;
  spec.seed = 9;
  TrialOutcome out = run_differential_trial(spec, 0.1, /*force_fault=*/true);
  CHECK(out.quantum_mismatches == 1);
  CHECK_FALSE(out.clean());
}

TEST_CASE("determinism with failure injection on") {
  OracleArray arr = generate_array(128, 1 << 10, 3);
  FindminConfig cfg;
  cfg.failure_injection = true;
  cfg.rng_seed = 77;
  QuantumRmq a(arr, 64, 0.9, cfg), b(arr, 64, 0.9, cfg);
  WorkloadSpec spec;
  spec.n = 128;
  spec.q = 64;
  spec.seed = 21;
  for (const Op& op : generate_ops(spec)) {
    if (op.kind == Op::Kind::query) {
      CHECK(a.query(op.l, op.r) == b.query(op.l, op.r));
    } else {
      a.modify(op.l, op.r, op.fn);
      b.modify(op.l, op.r, op.fn);
    }
  }
  CHECK(a.ledger() == b.ledger());
  std::ostringstream ta, tb;
  QuantumRmq::write_traces(a.traces(), ta);
  QuantumRmq::write_traces(b.traces(), tb);
  CHECK(ta.str() == tb.str());
}

TEST_CASE("validate_traces flags crafted violations") {
  std::uint64_t n_padded = 1024;

  CHECK(validate_traces({}, n_padded).empty());

  CreationTrace good{2, 2, {3, 4, 5}};
  CHECK(validate_traces({good}, n_padded).empty());

  CreationTrace below_op{5, std::nullopt, {3, 8}};  // 3 <= op index 5
  CHECK_FALSE(validate_traces({below_op}, n_padded).empty());

  CreationTrace five_in_layer{1, std::nullopt, {8, 9, 10, 11, 12}};
  CHECK_FALSE(validate_traces({five_in_layer}, n_padded).empty());

  CreationTrace unsorted{1, std::nullopt, {4, 3}};
  CHECK_FALSE(validate_traces({unsorted}, n_padded).empty());

  // Rank 9 must be at least twice the smallest; 24 < 32.
  CreationTrace slow_growth{1, std::nullopt, {16, 17, 18, 19, 20, 21, 22, 23, 24}};
  bool saw_growth_flag = false;
  for (const TraceViolation& v : validate_traces({slow_growth}, n_padded)) {
    if (v.detail.find("geometric") != std::string::npos) saw_growth_flag = true;
  }
  CHECK(saw_growth_flag);

  CreationTrace out_of_range_node{1, std::nullopt, {2 * n_padded}};
  CHECK_FALSE(validate_traces({out_of_range_node}, n_padded).empty());
}
