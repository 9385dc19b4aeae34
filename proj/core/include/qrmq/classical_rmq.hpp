// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qrmq/cost_ledger.hpp"
#include "qrmq/oracle_array.hpp"
#include "qrmq/segtree_layout.hpp"
#include "qrmq/value.hpp"

namespace qrmq {

/// Eagerly built lazy segment tree: the baseline. Construction reads every
/// array element once through the accounted oracle; queries and range updates
/// then touch O(log n) nodes.
class ClassicalSegTree {
 public:
  explicit ClassicalSegTree(const OracleArray& arr);

  /// Minimum (value, leftmost index) over positions [l, r], 1-based inclusive.
  ValueIndexPair query(std::uint64_t l, std::uint64_t r);

  /// Applies f to every position in [l, r].
  void modify(std::uint64_t l, std::uint64_t r, const ModFn& f);

  /// Moves node k's pending tag to its children. Leaves carry no children;
  /// calling this on a leaf is a bug.
  void push_down(std::uint64_t k);

  /// Recomputes node k's value from its children.
  void update(std::uint64_t k);

  std::uint64_t size() const { return n_logical_; }
  std::uint64_t padded_size() const { return n_padded_; }
  const CostLedger& ledger() const { return ledger_; }
  /// Nodes entered across all queries and modifies so far (one count per
  /// recursive visit, construction excluded).
  std::uint64_t node_visits() const { return node_visits_; }
  const NodeRecord& node(std::uint64_t k) const;

 private:
  ValueIndexPair query_rec(std::uint64_t k, std::uint64_t l, std::uint64_t r);
  void modify_rec(std::uint64_t k, std::uint64_t l, std::uint64_t r, const ModFn& f);

  std::uint64_t n_logical_;
  std::uint64_t n_padded_;
  std::vector<NodeRecord> nodes_;  // 1-based, size 2 * n_padded_
  CostLedger ledger_;
  std::uint64_t node_visits_ = 0;
};

}  // namespace qrmq
