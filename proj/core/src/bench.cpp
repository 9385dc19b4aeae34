// SPDX-License-Identifier: Apache-2.0
#include "qrmq/bench.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qrmq/classical_rmq.hpp"
#include "qrmq/oracle_array.hpp"
#include "qrmq/quantum_rmq.hpp"
#include "qrmq/workloads.hpp"

namespace qrmq {

BenchRow run_bench_cell(std::uint64_t n, std::uint64_t q, double eps, std::uint64_t seed) {
  if (q > n) throw std::invalid_argument("run_bench_cell: q must not exceed n");
  if (q < 1) throw std::invalid_argument("run_bench_cell: q must be positive");
  WorkloadSpec spec;
  spec.n = n;
  spec.q = q;
  spec.seed = seed;
  OracleArray arr = generate_array(spec.n, spec.value_range, spec.seed);
  OpSequence ops = generate_ops(spec);

  QuantumRmq tree(arr, q, eps);
  ClassicalSegTree base(arr);
  std::uint64_t init_reads = base.ledger().classical_reads;
  for (const Op& op : ops) {
    if (op.kind == Op::Kind::query) {
      tree.query(op.l, op.r);
      base.query(op.l, op.r);
    } else {
      tree.modify(op.l, op.r, op.fn);
      base.modify(op.l, op.r, op.fn);
    }
  }

  BenchRow row;
  row.n = n;
  row.q = q;
  row.eps = eps;
  row.seed = seed;
  row.quantum_queries = tree.ledger().quantum_queries;
  row.classical_reads = tree.ledger().classical_reads;
  row.findmin_calls = tree.ledger().findmin_calls;
  row.failures_injected = tree.ledger().failures_injected;
  row.baseline_init_reads = init_reads;
  row.baseline_node_visits = base.node_visits();
  return row;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.q << ',' << r.eps << ',' << r.seed << ',' << r.quantum_queries << ','
        << r.classical_reads << ',' << r.findmin_calls << ',' << r.failures_injected << ','
        << r.baseline_init_reads << ',' << r.baseline_node_visits << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::uint64_t parse_u64_field(const std::string& s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::runtime_error("bench csv: bad integer field '" + s + "'");
  }
  return v;
}

double parse_double_field(const std::string& s) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::runtime_error("bench csv: bad numeric field '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<BenchRow> parse_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("bench csv: empty input");
  if (line != kBenchCsvHeader) throw std::runtime_error("bench csv: unexpected header");
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 10) throw std::runtime_error("bench csv: expected 10 fields");
    BenchRow r;
    r.n = parse_u64_field(f[0]);
    r.q = parse_u64_field(f[1]);
    r.eps = parse_double_field(f[2]);
    r.seed = parse_u64_field(f[3]);
    r.quantum_queries = parse_u64_field(f[4]);
    r.classical_reads = parse_u64_field(f[5]);
    r.findmin_calls = parse_u64_field(f[6]);
    r.failures_injected = parse_u64_field(f[7]);
    r.baseline_init_reads = parse_u64_field(f[8]);
    r.baseline_node_visits = parse_u64_field(f[9]);
    rows.push_back(r);
  }
  return rows;
}

FitReport fit_log_log(const std::vector<BenchRow>& rows, FitAxis axis) {
  std::map<std::uint64_t, std::pair<double, std::size_t>> acc;  // axis -> (sum logQ, count)
  for (const BenchRow& r : rows) {
    std::uint64_t x = axis == FitAxis::q ? r.q : r.n;
    if (x == 0 || r.quantum_queries == 0) {
      throw std::invalid_argument("fit_log_log: rows must have positive axis and query counts");
    }
    auto& slot = acc[x];
    slot.first += std::log(static_cast<double>(r.quantum_queries));
    slot.second += 1;
  }
  if (acc.size() < 4) {
    throw std::invalid_argument("fit_log_log: need at least 4 distinct axis values");
  }

  std::size_t m = acc.size();
  double sx = 0, sy = 0;
  for (const auto& [x, slot] : acc) {
    sx += std::log(static_cast<double>(x));
    sy += slot.first / static_cast<double>(slot.second);
  }
  double mx = sx / static_cast<double>(m);
  double my = sy / static_cast<double>(m);
  double sxx = 0, sxy = 0;
  for (const auto& [x, slot] : acc) {
    double dx = std::log(static_cast<double>(x)) - mx;
    double dy = slot.first / static_cast<double>(slot.second) - my;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  FitReport rep;
  rep.axis = axis;
  rep.points_used = m;
  rep.slope = sxy / sxx;
  rep.intercept = my - rep.slope * mx;
  double ss_res = 0, ss_tot = 0;
  for (const auto& [x, slot] : acc) {
    double lx = std::log(static_cast<double>(x));
    double ly = slot.first / static_cast<double>(slot.second);
    double fit = rep.intercept + rep.slope * lx;
    ss_res += (ly - fit) * (ly - fit);
    ss_tot += (ly - my) * (ly - my);
  }
  rep.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
  return rep;
}

}  // namespace qrmq
