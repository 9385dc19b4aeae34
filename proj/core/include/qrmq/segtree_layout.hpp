// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "qrmq/value.hpp"

namespace qrmq {

// Heap numbering over a padded power-of-two leaf row: root is node 1,
// children of k are 2k and 2k+1, leaves are n_padded .. 2*n_padded - 1.
// All positions are 1-based.

/// Leaf-row width for a logical length: smallest power of two >= n, floor 2.
inline std::uint64_t padded_length(std::uint64_t n_logical) {
  if (n_logical == 0) throw std::invalid_argument("padded_length: length must be positive");
  std::uint64_t p = std::bit_ceil(n_logical);
  return p < 2 ? 2 : p;
}

/// Number of layers, root layer included: log2(n_padded) + 1.
inline std::uint64_t tree_layers(std::uint64_t n_padded) {
  return static_cast<std::uint64_t>(std::bit_width(n_padded));
}

/// Layer of node k, root at layer 1.
inline std::uint64_t node_layer(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("node_layer: node numbers start at 1");
  return static_cast<std::uint64_t>(std::bit_width(k));
}

/// Largest valid node number: 2 * n_padded - 1.
inline std::uint64_t max_node_number(std::uint64_t n_padded) {
  return 2 * n_padded - 1;
}

inline bool is_valid_node(std::uint64_t k, std::uint64_t n_padded) {
  return k >= 1 && k <= max_node_number(n_padded);
}

inline bool is_leaf(std::uint64_t k, std::uint64_t n_padded) {
  return k >= n_padded;
}

/// Inclusive 1-based span covered by node k. With d = layer(k) - 1 and
/// off = k - 2^d, the span is [off*w + 1, (off+1)*w] for w = n_padded / 2^d.
inline std::pair<std::uint64_t, std::uint64_t> node_span(std::uint64_t k,
                                                         std::uint64_t n_padded) {
  if (!is_valid_node(k, n_padded)) throw std::out_of_range("node_span: node out of range");
  std::uint64_t d = node_layer(k) - 1;
  std::uint64_t off = k - (std::uint64_t{1} << d);
  std::uint64_t w = n_padded >> d;
  return {off * w + 1, (off + 1) * w};
}

/// (value, pending tag) stored at a tree node. Invariant: v is the span
/// minimum with g already applied to it; g is still pending for the strict
/// descendants. Ancestor tags are not reflected in either field.
struct NodeRecord {
  ValueIndexPair v;
  ModFn g = ModFn::identity();
};

}  // namespace qrmq
