// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qrmq {

/// Element of the totally ordered value domain: a natural number or +infinity.
/// Finite values cover the full 64-bit range; +infinity compares greater than
/// every finite value and absorbs addition.
class Value {
 public:
  constexpr Value() = default;  // +infinity, the neutral element of min

  static constexpr Value finite(std::uint64_t magnitude) { return Value(magnitude, false); }
  static constexpr Value infinity() { return Value(0, true); }

  constexpr bool is_finite() const { return !infinite_; }
  constexpr bool is_infinite() const { return infinite_; }

  constexpr std::uint64_t magnitude() const {
    if (infinite_) throw std::logic_error("Value::magnitude: value is +inf");
    return magnitude_;
  }

  friend constexpr bool operator==(Value, Value) = default;
  friend constexpr std::strong_ordering operator<=>(Value a, Value b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.magnitude_ <=> b.magnitude_;
  }

 private:
  constexpr Value(std::uint64_t magnitude, bool infinite)
      : magnitude_(infinite ? 0 : magnitude), infinite_(infinite) {}

  std::uint64_t magnitude_ = 0;
  bool infinite_ = true;
};

constexpr Value value_min(Value x, Value y) { return y < x ? y : x; }

/// Canonical element of the modification monoid: identity, add a finite
/// constant, or assign a constant (possibly +inf). Closed under composition and
/// distributes over min, which is what lets a tag stand for a whole subtree.
class ModFn {
 public:
  enum class Kind : std::uint8_t { identity, add, assign };

  constexpr ModFn() = default;  // identity

  static constexpr ModFn identity() { return ModFn(); }
  static constexpr ModFn add(Value b) {
    if (b.is_infinite()) throw std::invalid_argument("ModFn::add: operand must be finite");
    return ModFn(Kind::add, b);
  }
  static constexpr ModFn add(std::uint64_t b) { return ModFn(Kind::add, Value::finite(b)); }
  static constexpr ModFn assign(Value c) { return ModFn(Kind::assign, c); }

  constexpr Kind kind() const { return kind_; }
  constexpr Value operand() const { return operand_; }
  constexpr bool is_identity() const { return kind_ == Kind::identity; }

  friend constexpr bool operator==(const ModFn&, const ModFn&) = default;

 private:
  constexpr ModFn(Kind kind, Value operand) : kind_(kind), operand_(operand) {}

  Kind kind_ = Kind::identity;
  Value operand_ = Value::finite(0);
};

/// (value, 1-based index), ordered lexicographically so that equal values
/// resolve to the smaller index.
struct ValueIndexPair {
  Value value;
  std::uint64_t index = 0;

  friend constexpr bool operator==(const ValueIndexPair&, const ValueIndexPair&) = default;
  friend constexpr std::strong_ordering operator<=>(const ValueIndexPair& a,
                                                    const ValueIndexPair& b) {
    if (auto c = a.value <=> b.value; c != 0) return c;
    return a.index <=> b.index;
  }
};

constexpr ValueIndexPair pair_min(const ValueIndexPair& p, const ValueIndexPair& q) {
  return q < p ? q : p;
}

/// Throws std::overflow_error instead of wrapping; differential tests depend on
/// modifications never silently diverging from the reference array.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

/// Canonical composition f o g (g applied first).
ModFn mod_compose(const ModFn& f, const ModFn& g);

Value mod_apply(const ModFn& f, Value x);

/// Transforms the value and keeps the witness index.
ValueIndexPair mod_apply(const ModFn& f, const ValueIndexPair& p);

// Textual encodings used by fixture and op-sequence files: values are decimal
// integers or "inf"; modifications are "id", "add:<b>", "assign:<c>".
std::string to_token(Value v);
std::string to_token(const ModFn& f);
Value parse_value(std::string_view token);
ModFn parse_modfn(std::string_view token);

}  // namespace qrmq
