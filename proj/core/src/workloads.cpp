// SPDX-License-Identifier: Apache-2.0
#include "qrmq/workloads.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qrmq/rng.hpp"

namespace qrmq {

namespace {

// Splitting constant; keeps the op stream decorrelated from the array drawn
// with the same seed.
constexpr std::uint64_t kOpStreamSalt = 0x9e3779b97f4a7c15ULL;

Value draw_value(std::mt19937_64& g, std::uint64_t value_range) {
  // value_range + 1 wraps to 0 at the top of the domain; uniform_below treats
  // 0 as the full 64-bit range, which is the right limit.
  return Value::finite(uniform_below(g, value_range + 1));
}

}  // namespace

void validate(const WorkloadSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("WorkloadSpec: n must be positive");
  if (spec.q > spec.n) throw std::invalid_argument("WorkloadSpec: q must not exceed n");
  if (!(spec.query_fraction >= 0.0) || !(spec.query_fraction <= 1.0)) {
    throw std::invalid_argument("WorkloadSpec: query_fraction must lie in [0, 1]");
  }
  double w[3] = {spec.add_weight, spec.point_assign_weight, spec.range_identity_weight};
  double total = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) throw std::invalid_argument("WorkloadSpec: weights must be non-negative");
    total += x;
  }
  if (!(total > 0.0)) throw std::invalid_argument("WorkloadSpec: some weight must be positive");
}

OracleArray generate_array(std::uint64_t n, std::uint64_t value_range, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_array: n must be positive");
  std::mt19937_64 g(seed);
  std::vector<Value> values;
  values.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) values.push_back(draw_value(g, value_range));
  return OracleArray(std::move(values));
}

OpSequence generate_ops(const WorkloadSpec& spec) {
  validate(spec);
  std::mt19937_64 g(spec.seed ^ kOpStreamSalt);
  OpSequence ops;
  ops.reserve(spec.q);
  for (std::uint64_t i = 0; i < spec.q; ++i) {
    Op op;
    bool is_query = uniform01(g) < spec.query_fraction;
    bool is_point = uniform01(g) < 0.5;
    op.l = uniform_range(g, 1, spec.n);
    op.r = is_point ? op.l : uniform_range(g, 1, spec.n);
    if (op.r < op.l) std::swap(op.l, op.r);
    if (is_query) {
      op.kind = Op::Kind::query;
    } else {
      op.kind = Op::Kind::modify;
      double total = spec.add_weight + spec.point_assign_weight + spec.range_identity_weight;
      double x = uniform01(g) * total;
      if (x < spec.add_weight) {
        op.fn = ModFn::add(draw_value(g, spec.value_range));
      } else if (x < spec.add_weight + spec.point_assign_weight) {
        op.r = op.l;  // assigns are point updates
        // An occasional +inf assign exercises the absorbing element.
        op.fn = uniform_below(g, 16) == 0 ? ModFn::assign(Value::infinity())
                                          : ModFn::assign(draw_value(g, spec.value_range));
      } else {
        op.fn = ModFn::identity();
      }
    }
    ops.push_back(op);
  }
  return ops;
}

void write_ops(const OpSequence& ops, std::ostream& out) {
  for (const Op& op : ops) {
    if (op.kind == Op::Kind::query) {
      out << "Q " << op.l << ' ' << op.r << '\n';
    } else {
      out << "M " << op.l << ' ' << op.r << ' ' << to_token(op.fn) << '\n';
    }
  }
}

OpSequence parse_ops(std::istream& in, std::uint64_t n) {
  OpSequence ops;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    Op op;
    std::string where = "op file line " + std::to_string(line_no);
    if (!(ls >> tag >> op.l >> op.r)) throw std::runtime_error(where + ": malformed op");
    if (op.l < 1 || op.r > n || op.l > op.r) throw std::runtime_error(where + ": range outside array");
    if (tag == "Q") {
      op.kind = Op::Kind::query;
    } else if (tag == "M") {
      op.kind = Op::Kind::modify;
      std::string token;
      if (!(ls >> token)) throw std::runtime_error(where + ": missing modification token");
      op.fn = parse_modfn(token);
    } else {
      throw std::runtime_error(where + ": unknown op tag '" + tag + "'");
    }
    std::string rest;
    if (ls >> rest) throw std::runtime_error(where + ": trailing content");
    ops.push_back(op);
  }
  return ops;
}

}  // namespace qrmq
