// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrmq/cost_ledger.hpp"
#include "qrmq/oracle_array.hpp"
#include "qrmq/qcost.hpp"
#include "qrmq/segtree_layout.hpp"
#include "qrmq/value.hpp"

namespace qrmq {

/// Nodes created while serving one operation. The top-down slot is the node
/// whose number equals the op index, created before the operation proper;
/// lazy_nodes are the nodes pushdown had to materialize, listed ascending once
/// the operation completes.
struct CreationTrace {
  std::uint64_t op_index = 0;
  std::optional<std::uint64_t> topdown_node;
  std::vector<std::uint64_t> lazy_nodes;
};

/// Nodes entered while serving one operation, split by whether the node's span
/// was fully inside the requested range (covered, recursion stops) or not
/// (visited, recursion continues below). Encounter order.
struct TraversalRecord {
  std::uint64_t op_index = 0;
  std::vector<std::uint64_t> visited;
  std::vector<std::uint64_t> covered;
};

/// Snapshot taken at the instant a node was created: what the minimum search
/// returned and which ancestor tags were still pending above the node. The
/// correctness of creating from the unmodified array is exactly the claim that
/// applying `pending` to `initial` yields the node's true current minimum.
struct CreationEvent {
  std::uint64_t node = 0;
  std::uint64_t op_index = 0;
  std::uint64_t span_lo = 0;
  std::uint64_t span_hi = 0;
  ValueIndexPair initial;
  ModFn pending;
  std::uint64_t charge = 0;
};

/// One structural-invariant breach found in a creation trace.
struct TraceViolation {
  std::uint64_t op_index = 0;
  std::string detail;
};

/// Lazy segment tree over a simulated quantum minimum finder. Construction is
/// O(1): no nodes exist and nothing is charged until operations arrive. Node
/// values are produced on demand by FindminSimulator over the original array;
/// operation k first materializes node k (top-down completion), and pushdown
/// materializes missing children before propagating tags.
///
/// The array must outlive the structure. With failure injection off, answers
/// match a brute-force reference exactly.
class QuantumRmq {
 public:
  /// op_budget is the declared number of operations q; each creation is priced
  /// at error eps_total / (4 * q * log2(n_padded)). Budgets up to
  /// 2 * n_padded are accepted so that a caller following the k-minimum
  /// recipe (budget 2k, k up to n) stays admissible.
  QuantumRmq(const OracleArray& arr, std::uint64_t op_budget, double eps_total,
             FindminConfig cfg = {});

  /// Minimum (value, leftmost index) over [l, r], 1-based inclusive. Counts
  /// as one operation against the budget.
  ValueIndexPair query(std::uint64_t l, std::uint64_t r);

  /// Applies f to every position in [l, r]. Counts as one operation.
  void modify(std::uint64_t l, std::uint64_t r, const ModFn& f);

  std::uint64_t size() const { return n_logical_; }
  std::uint64_t padded_size() const { return n_padded_; }
  std::uint64_t op_budget() const { return op_budget_; }
  std::uint64_t ops_processed() const { return k_ops_; }
  double per_create_error() const { return eps_create_; }
  const CostLedger& ledger() const { return ledger_; }

  std::uint64_t node_count() const { return nodes_.size(); }
  bool has_node(std::uint64_t k) const { return nodes_.find(k) != nodes_.end(); }
  const NodeRecord& node(std::uint64_t k) const;

  /// Composition of the pending tags on the strict-ancestor path of k, deeper
  /// tags applied first. Absent ancestors contribute identity.
  ModFn pending_tags(std::uint64_t k) const;

  const std::vector<CreationTrace>& traces() const { return traces_; }
  const std::vector<TraversalRecord>& traversals() const { return traversals_; }
  const std::vector<CreationEvent>& creation_events() const { return creation_events_; }

  /// Line-delimited text form: `op=<k> topdown=<id|-> lazy=<comma-list>`.
  static void write_traces(const std::vector<CreationTrace>& traces, std::ostream& out);

 private:
  void begin_op(std::uint64_t l, std::uint64_t r);
  bool create_node(std::uint64_t k);
  void push_down(std::uint64_t k);
  void update(std::uint64_t k);
  NodeRecord& node_ref(std::uint64_t k);
  ValueIndexPair query_rec(std::uint64_t k, std::uint64_t l, std::uint64_t r);
  void modify_rec(std::uint64_t k, std::uint64_t l, std::uint64_t r, const ModFn& f);

  const OracleArray* arr_;
  std::uint64_t n_logical_;
  std::uint64_t n_padded_;
  std::uint64_t op_budget_;
  double eps_total_;
  double eps_create_;
  std::uint64_t k_ops_ = 0;
  FindminSimulator findmin_;
  CostLedger ledger_;
  std::unordered_map<std::uint64_t, NodeRecord> nodes_;
  std::vector<CreationTrace> traces_;
  std::vector<TraversalRecord> traversals_;
  std::vector<CreationEvent> creation_events_;
};

/// Checks every trace against the structural facts the cost analysis rests on:
/// lazily created nodes exceed the op index, at most 4 of them share a layer,
/// the i-th smallest is at least 2^floor((i-1)/8) times the smallest, and the
/// count never exceeds 4*log2(n_padded) + 2. Returns all breaches found.
std::vector<TraceViolation> validate_traces(const std::vector<CreationTrace>& traces,
                                            std::uint64_t n_padded);

}  // namespace qrmq
