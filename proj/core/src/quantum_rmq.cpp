// SPDX-License-Identifier: Apache-2.0
#include "qrmq/quantum_rmq.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qrmq {

QuantumRmq::QuantumRmq(const OracleArray& arr, std::uint64_t op_budget, double eps_total,
                       FindminConfig cfg)
    : arr_(&arr),
      n_logical_(arr.size()),
      n_padded_(padded_length(arr.size())),
      op_budget_(op_budget),
      eps_total_(eps_total),
      findmin_(cfg) {
  if (op_budget_ == 0) throw std::invalid_argument("QuantumRmq: op budget must be positive");
  if (op_budget_ > 2 * n_padded_) {
    throw std::invalid_argument("QuantumRmq: op budget exceeds 2 * padded length");
  }
  if (!(eps_total_ > 0.0) || !(eps_total_ < 1.0)) {
    throw std::invalid_argument("QuantumRmq: eps must lie in (0, 1)");
  }
  std::uint64_t layers_below_root = tree_layers(n_padded_) - 1;  // log2(n_padded)
  eps_create_ =
      eps_total_ / (4.0 * static_cast<double>(op_budget_) * static_cast<double>(layers_below_root));
}

const NodeRecord& QuantumRmq::node(std::uint64_t k) const {
  auto it = nodes_.find(k);
  if (it == nodes_.end()) throw std::out_of_range("QuantumRmq::node: node not created");
  return it->second;
}

NodeRecord& QuantumRmq::node_ref(std::uint64_t k) {
  auto it = nodes_.find(k);
  if (it == nodes_.end()) throw std::logic_error("QuantumRmq: traversal reached absent node");
  return it->second;
}

ModFn QuantumRmq::pending_tags(std::uint64_t k) const {
  if (!is_valid_node(k, n_padded_)) throw std::out_of_range("pending_tags: node out of range");
  ModFn pending = ModFn::identity();
  // Root first; deeper pending tags are older, so each next tag composes on
  // the inside.
  for (std::uint64_t shift = node_layer(k) - 1; shift >= 1; --shift) {
    auto it = nodes_.find(k >> shift);
    if (it != nodes_.end()) pending = mod_compose(pending, it->second.g);
  }
  return pending;
}

bool QuantumRmq::create_node(std::uint64_t k) {
  if (!is_valid_node(k, n_padded_)) throw std::logic_error("create_node: invalid node number");
  if (nodes_.find(k) != nodes_.end()) return false;
  auto [lo, hi] = node_span(k, n_padded_);
  ModFn pending = pending_tags(k);
  NodeRecord rec;
  std::uint64_t charge = 0;
  if (lo > n_logical_) {
    // Span is pure padding; the minimum is +inf by construction, no search.
    rec.v = ValueIndexPair{Value::infinity(), lo};
  } else {
    std::uint64_t before = ledger_.quantum_queries;
    rec.v = findmin_.run(*arr_, lo, std::min(hi, n_logical_), eps_create_, ledger_);
    charge = ledger_.quantum_queries - before;
  }
  nodes_.emplace(k, rec);
  creation_events_.push_back(CreationEvent{k, k_ops_, lo, hi, rec.v, pending, charge});
  return true;
}

void QuantumRmq::push_down(std::uint64_t k) {
  if (is_leaf(k, n_padded_)) throw std::logic_error("push_down: leaf has no children");
  // Children must exist before the tag can move, even an identity tag.
  for (std::uint64_t c : {2 * k, 2 * k + 1}) {
    if (create_node(c)) traces_.back().lazy_nodes.push_back(c);
  }
  NodeRecord& nd = node_ref(k);
  if (nd.g.is_identity()) return;
  for (std::uint64_t c : {2 * k, 2 * k + 1}) {
    NodeRecord& ch = node_ref(c);
    ch.v = mod_apply(nd.g, ch.v);
    ch.g = mod_compose(nd.g, ch.g);  // parent tag is the newer one
  }
  nd.g = ModFn::identity();
}

void QuantumRmq::update(std::uint64_t k) {
  if (is_leaf(k, n_padded_)) throw std::logic_error("update: leaf has no children");
  node_ref(k).v = pair_min(node_ref(2 * k).v, node_ref(2 * k + 1).v);
}

void QuantumRmq::begin_op(std::uint64_t l, std::uint64_t r) {
  if (l < 1 || r > n_logical_ || l > r) throw std::out_of_range("QuantumRmq: bad range");
  if (k_ops_ >= op_budget_) throw std::runtime_error("QuantumRmq: operation budget exhausted");
  k_ops_ += 1;
  traces_.push_back(CreationTrace{k_ops_, std::nullopt, {}});
  traversals_.push_back(TraversalRecord{k_ops_, {}, {}});
  // Top-down completion: node k exists before op k runs, when k names a node.
  if (is_valid_node(k_ops_, n_padded_) && create_node(k_ops_)) {
    traces_.back().topdown_node = k_ops_;
  }
}

ValueIndexPair QuantumRmq::query(std::uint64_t l, std::uint64_t r) {
  begin_op(l, r);
  ValueIndexPair res = query_rec(1, l, r);
  std::ranges::sort(traces_.back().lazy_nodes);
  return res;
}

void QuantumRmq::modify(std::uint64_t l, std::uint64_t r, const ModFn& f) {
  begin_op(l, r);
  modify_rec(1, l, r, f);
  std::ranges::sort(traces_.back().lazy_nodes);
}

ValueIndexPair QuantumRmq::query_rec(std::uint64_t k, std::uint64_t l, std::uint64_t r) {
  auto [kl, kr] = node_span(k, n_padded_);
  if (l <= kl && kr <= r) {
    traversals_.back().covered.push_back(k);
    return node_ref(k).v;
  }
  traversals_.back().visited.push_back(k);
  push_down(k);
  std::uint64_t mid = (kl + kr) / 2;
  if (r <= mid) return query_rec(2 * k, l, r);
  if (l > mid) return query_rec(2 * k + 1, l, r);
  return pair_min(query_rec(2 * k, l, r), query_rec(2 * k + 1, l, r));
}

void QuantumRmq::modify_rec(std::uint64_t k, std::uint64_t l, std::uint64_t r, const ModFn& f) {
  auto [kl, kr] = node_span(k, n_padded_);
  if (l <= kl && kr <= r) {
    traversals_.back().covered.push_back(k);
    NodeRecord& nd = node_ref(k);
    nd.v = mod_apply(f, nd.v);
    nd.g = mod_compose(f, nd.g);
    return;
  }
  traversals_.back().visited.push_back(k);
  push_down(k);
  std::uint64_t mid = (kl + kr) / 2;
  if (l <= mid) modify_rec(2 * k, l, r, f);
  if (r > mid) modify_rec(2 * k + 1, l, r, f);
  update(k);
}

void QuantumRmq::write_traces(const std::vector<CreationTrace>& traces, std::ostream& out) {
  for (const CreationTrace& t : traces) {
    out << "op=" << t.op_index << " topdown=";
    if (t.topdown_node) {
      out << *t.topdown_node;
    } else {
      out << '-';
    }
    out << " lazy=";
    for (std::size_t i = 0; i < t.lazy_nodes.size(); ++i) {
      if (i > 0) out << ',';
      out << t.lazy_nodes[i];
    }
    out << '\n';
  }
}

namespace {

void flag(std::vector<TraceViolation>& out, std::uint64_t op, std::string detail) {
  out.push_back(TraceViolation{op, std::move(detail)});
}

}  // namespace

std::vector<TraceViolation> validate_traces(const std::vector<CreationTrace>& traces,
                                            std::uint64_t n_padded) {
  std::vector<TraceViolation> out;
  std::uint64_t s = tree_layers(n_padded) - 1;  // log2(n_padded)
  std::uint64_t max_lazy = 4 * s + 2;
  for (const CreationTrace& t : traces) {
    const auto& m = t.lazy_nodes;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!is_valid_node(m[i], n_padded)) {
        flag(out, t.op_index, "lazy node " + std::to_string(m[i]) + " out of range");
      }
      if (i > 0 && m[i] <= m[i - 1]) {
        flag(out, t.op_index, "lazy nodes not strictly ascending");
        break;
      }
    }
    for (std::uint64_t node : m) {
      if (node <= t.op_index) {
        flag(out, t.op_index,
             "lazy node " + std::to_string(node) + " does not exceed the op index");
      }
    }
    std::vector<std::uint64_t> per_layer(s + 2, 0);
    for (std::uint64_t node : m) {
      std::uint64_t layer = node_layer(node);
      if (layer < per_layer.size() && ++per_layer[layer] == 5) {
        flag(out, t.op_index, "layer " + std::to_string(layer) + " has more than 4 lazy nodes");
      }
    }
    if (!m.empty()) {
      unsigned __int128 m1 = m.front();
      for (std::size_t i = 0; i < m.size(); ++i) {
        unsigned __int128 bound = m1 << ((i) / 8);  // i is zero-based, exponent floor(i/8)
        if (static_cast<unsigned __int128>(m[i]) < bound) {
          flag(out, t.op_index,
               "lazy node " + std::to_string(m[i]) + " at rank " + std::to_string(i + 1) +
                   " below geometric floor");
        }
      }
    }
    if (m.size() > max_lazy) {
      flag(out, t.op_index,
           "trace has " + std::to_string(m.size()) + " lazy nodes, cap is " +
               std::to_string(max_lazy));
    }
  }
  return out;
}

}  // namespace qrmq
