// SPDX-License-Identifier: Apache-2.0
#include "qrmq/oracle_array.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qrmq {

OracleArray::OracleArray(std::vector<Value> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("OracleArray: length must be >= 1");
}

Value OracleArray::read(std::size_t i, CostLedger& ledger) const {
  if (i < 1 || i > values_.size())
    throw std::out_of_range("OracleArray::read: index " + std::to_string(i) + " not in [1, " +
                            std::to_string(values_.size()) + "]");
  ++ledger.classical_reads;
  return values_[i - 1];
}

OracleArray load_array_fixture(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("n="))
    throw std::runtime_error("array fixture: expected leading 'n=<int>' line");
  std::size_t n = 0;
  try {
    n = std::stoull(line.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("array fixture: bad length in '" + line + "'");
  }
  std::vector<Value> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("array fixture: expected " + std::to_string(n) + " values, got " +
                               std::to_string(i));
    values.push_back(parse_value(line));
  }
  return OracleArray(std::move(values));
}

void save_array_fixture(const OracleArray& arr, std::ostream& out) {
  out << "n=" << arr.size() << '\n';
  for (const Value& v : arr.values()) out << to_token(v) << '\n';
}

BruteForceArray::BruteForceArray(const OracleArray& arr)
    : values_(arr.values().begin(), arr.values().end()) {}

BruteForceArray::BruteForceArray(std::vector<Value> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("BruteForceArray: length must be >= 1");
}

void BruteForceArray::check_range(std::size_t l, std::size_t r) const {
  if (l < 1 || l > r || r > values_.size())
    throw std::out_of_range("BruteForceArray: bad range [" + std::to_string(l) + ", " +
                            std::to_string(r) + "] for n=" + std::to_string(values_.size()));
}

ValueIndexPair BruteForceArray::rmq(std::size_t l, std::size_t r) const {
  check_range(l, r);
  ValueIndexPair best{values_[l - 1], l};
  for (std::size_t i = l + 1; i <= r; ++i) best = pair_min(best, {values_[i - 1], i});
  return best;
}

void BruteForceArray::modify(std::size_t l, std::size_t r, const ModFn& f) {
  check_range(l, r);
  for (std::size_t i = l - 1; i < r; ++i) values_[i] = mod_apply(f, values_[i]);
}

std::vector<std::uint64_t> BruteForceArray::k_smallest(std::size_t k) const {
  if (k < 1 || k > values_.size())
    throw std::out_of_range("BruteForceArray::k_smallest: k=" + std::to_string(k) +
                            " not in [1, " + std::to_string(values_.size()) + "]");
  std::vector<std::uint64_t> indices(values_.size());
  std::iota(indices.begin(), indices.end(), std::uint64_t{1});
  std::ranges::sort(indices, [&](std::uint64_t a, std::uint64_t b) {
    return ValueIndexPair{values_[a - 1], a} < ValueIndexPair{values_[b - 1], b};
  });
  indices.resize(k);
  return indices;
}

}  // namespace qrmq
