// SPDX-License-Identifier: Apache-2.0
#include "qrmq/value.hpp"

#include <charconv>

namespace qrmq {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("value overflow: use smaller magnitudes");
  return out;
}

ModFn mod_compose(const ModFn& f, const ModFn& g) {
  using Kind = ModFn::Kind;
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  if (f.kind() == Kind::assign) return f;  // assign discards whatever ran before
  // f is add; g is add or assign
  if (g.kind() == Kind::add)
    return ModFn::add(checked_add(f.operand().magnitude(), g.operand().magnitude()));
  return ModFn::assign(mod_apply(f, g.operand()));
}

Value mod_apply(const ModFn& f, Value x) {
  switch (f.kind()) {
    case ModFn::Kind::identity:
      return x;
    case ModFn::Kind::add:
      if (x.is_infinite()) return x;  // +inf absorbs addition
      return Value::finite(checked_add(x.magnitude(), f.operand().magnitude()));
    case ModFn::Kind::assign:
      return f.operand();
  }
  throw std::logic_error("mod_apply: corrupt ModFn kind");
}

ValueIndexPair mod_apply(const ModFn& f, const ValueIndexPair& p) {
  return {mod_apply(f, p.value), p.index};
}

std::string to_token(Value v) {
  return v.is_infinite() ? "inf" : std::to_string(v.magnitude());
}

std::string to_token(const ModFn& f) {
  switch (f.kind()) {
    case ModFn::Kind::identity:
      return "id";
    case ModFn::Kind::add:
      return "add:" + to_token(f.operand());
    case ModFn::Kind::assign:
      return "assign:" + to_token(f.operand());
  }
  throw std::logic_error("to_token: corrupt ModFn kind");
}

Value parse_value(std::string_view token) {
  if (token == "inf") return Value::infinity();
  std::uint64_t magnitude = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, magnitude);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("bad value token: '" + std::string(token) + "'");
  return Value::finite(magnitude);
}

ModFn parse_modfn(std::string_view token) {
  if (token == "id") return ModFn::identity();
  if (token.starts_with("add:")) {
    Value b = parse_value(token.substr(4));
    if (b.is_infinite()) throw std::invalid_argument("add operand must be finite");
    return ModFn::add(b);
  }
  if (token.starts_with("assign:")) return ModFn::assign(parse_value(token.substr(7)));
  throw std::invalid_argument("bad modfn token: '" + std::string(token) + "'");
}

}  // namespace qrmq
