// SPDX-License-Identifier: Apache-2.0
#include "qrmq/classical_rmq.hpp"

#include <stdexcept>

namespace qrmq {

ClassicalSegTree::ClassicalSegTree(const OracleArray& arr)
    : n_logical_(arr.size()),
      n_padded_(padded_length(arr.size())),
      nodes_(2 * n_padded_) {
  for (std::uint64_t i = 1; i <= n_padded_; ++i) {
    std::uint64_t k = n_padded_ + i - 1;
    if (i <= n_logical_) {
      nodes_[k].v = ValueIndexPair{arr.read(i, ledger_), i};
    } else {
      nodes_[k].v = ValueIndexPair{Value::infinity(), i};  // padding, free
    }
  }
  for (std::uint64_t k = n_padded_ - 1; k >= 1; --k) update(k);
}

void ClassicalSegTree::push_down(std::uint64_t k) {
  if (is_leaf(k, n_padded_)) throw std::logic_error("push_down: leaf has no children");
  NodeRecord& nd = nodes_[k];
  if (nd.g.is_identity()) return;
  for (std::uint64_t c : {2 * k, 2 * k + 1}) {
    nodes_[c].v = mod_apply(nd.g, nodes_[c].v);
    nodes_[c].g = mod_compose(nd.g, nodes_[c].g);  // parent tag is the newer one
  }
  nd.g = ModFn::identity();
}

void ClassicalSegTree::update(std::uint64_t k) {
  if (is_leaf(k, n_padded_)) throw std::logic_error("update: leaf has no children");
  nodes_[k].v = pair_min(nodes_[2 * k].v, nodes_[2 * k + 1].v);
}

ValueIndexPair ClassicalSegTree::query(std::uint64_t l, std::uint64_t r) {
  if (l < 1 || r > n_logical_ || l > r) throw std::out_of_range("query: bad range");
  return query_rec(1, l, r);
}

void ClassicalSegTree::modify(std::uint64_t l, std::uint64_t r, const ModFn& f) {
  if (l < 1 || r > n_logical_ || l > r) throw std::out_of_range("modify: bad range");
  modify_rec(1, l, r, f);
}

ValueIndexPair ClassicalSegTree::query_rec(std::uint64_t k, std::uint64_t l, std::uint64_t r) {
  node_visits_ += 1;
  auto [kl, kr] = node_span(k, n_padded_);
  if (l <= kl && kr <= r) return nodes_[k].v;
  push_down(k);
  std::uint64_t mid = (kl + kr) / 2;
  if (r <= mid) return query_rec(2 * k, l, r);
  if (l > mid) return query_rec(2 * k + 1, l, r);
  return pair_min(query_rec(2 * k, l, r), query_rec(2 * k + 1, l, r));
}

void ClassicalSegTree::modify_rec(std::uint64_t k, std::uint64_t l, std::uint64_t r,
                                  const ModFn& f) {
  node_visits_ += 1;
  auto [kl, kr] = node_span(k, n_padded_);
  if (l <= kl && kr <= r) {
    nodes_[k].v = mod_apply(f, nodes_[k].v);
    nodes_[k].g = mod_compose(f, nodes_[k].g);
    return;
  }
  push_down(k);
  std::uint64_t mid = (kl + kr) / 2;
  if (l <= mid) modify_rec(2 * k, l, r, f);
  if (r > mid) modify_rec(2 * k + 1, l, r, f);
  update(k);
}

const NodeRecord& ClassicalSegTree::node(std::uint64_t k) const {
  if (!is_valid_node(k, n_padded_)) throw std::out_of_range("node: node out of range");
  return nodes_[k];
}

}  // namespace qrmq
