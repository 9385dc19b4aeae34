// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: differential verification, ledger benchmarking over
// an (n, q) grid, log-log exponent fitting, and creation-trace export.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrmq/bench.hpp"
#include "qrmq/quantum_rmq.hpp"
#include "qrmq/verify.hpp"
#include "qrmq/workloads.hpp"

namespace {

int cmd_verify(std::uint64_t trials, std::uint64_t n_max, std::uint64_t seed, bool inject_fault) {
  qrmq::SuiteOutcome suite =
      qrmq::run_differential_suite(trials, n_max, seed, inject_fault, &std::cerr);
  const qrmq::TrialOutcome& t = suite.totals;
  std::cout << "trials=" << suite.trials << " ops=" << t.ops << '\n'
            << "quantum_mismatches=" << t.quantum_mismatches << '\n'
            << "classical_mismatches=" << t.classical_mismatches << '\n'
            << "structural_violations=" << t.structural_violations << '\n'
            << "freshness_violations=" << t.freshness_violations << '\n'
            << "accounting_violations=" << t.accounting_violations << '\n'
            << "init_violations=" << t.init_violations << '\n'
            << (suite.pass() ? "PASS" : "FAIL") << '\n';
  return suite.pass() ? 0 : 1;
}

int cmd_bench(const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& qs,
              double eps, std::uint64_t seeds, std::uint64_t seed_base,
              const std::string& out_path) {
  for (std::uint64_t q : qs) {
    for (std::uint64_t n : ns) {
      if (q > n) {
        std::cerr << "bench: q=" << q << " exceeds n=" << n << '\n';
        return 1;
      }
    }
  }
  std::vector<qrmq::BenchRow> rows;
  for (std::uint64_t n : ns) {
    for (std::uint64_t q : qs) {
      for (std::uint64_t s = 0; s < seeds; ++s) {
        rows.push_back(qrmq::run_bench_cell(n, q, eps, seed_base + s));
      }
    }
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "bench: cannot open " << out_path << '\n';
    return 1;
  }
  qrmq::write_bench_csv(rows, out);
  std::cout << "wrote " << rows.size() << " rows to " << out_path << '\n';
  return 0;
}

int cmd_fit(const std::string& in_path, const std::string& axis) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "fit: cannot open " << in_path << '\n';
    return 1;
  }
  std::vector<qrmq::BenchRow> rows = qrmq::parse_bench_csv(in);
  qrmq::FitAxis ax = axis == "n" ? qrmq::FitAxis::n : qrmq::FitAxis::q;
  qrmq::FitReport rep = qrmq::fit_log_log(rows, ax);
  std::cout << "axis=" << axis << " slope=" << rep.slope << " intercept=" << rep.intercept
            << " r_squared=" << rep.r_squared << " points=" << rep.points_used << '\n';
  return 0;
}

int cmd_trace(std::uint64_t n, const std::string& ops_path, const std::string& out_path,
              const std::string& array_path, double eps, std::uint64_t seed) {
  std::ifstream ops_in(ops_path);
  if (!ops_in) {
    std::cerr << "trace: cannot open " << ops_path << '\n';
    return 1;
  }
  qrmq::OpSequence ops = qrmq::parse_ops(ops_in, n);

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "trace: cannot open " << out_path << '\n';
    return 1;
  }
  if (ops.empty()) return 0;  // nothing ran, nothing to report

  std::vector<qrmq::Value> values;
  if (!array_path.empty()) {
    std::ifstream arr_in(array_path);
    if (!arr_in) {
      std::cerr << "trace: cannot open " << array_path << '\n';
      return 1;
    }
    qrmq::OracleArray fixture = qrmq::load_array_fixture(arr_in);
    if (fixture.size() != n) {
      std::cerr << "trace: fixture length " << fixture.size() << " does not match --n " << n
                << '\n';
      return 1;
    }
    values.assign(fixture.values().begin(), fixture.values().end());
  }
  qrmq::OracleArray arr = values.empty()
                              ? qrmq::generate_array(n, std::uint64_t{1} << 20, seed)
                              : qrmq::OracleArray(std::move(values));

  qrmq::QuantumRmq tree(arr, ops.size(), eps);
  for (const qrmq::Op& op : ops) {
    if (op.kind == qrmq::Op::Kind::query) {
      tree.query(op.l, op.r);
    } else {
      tree.modify(op.l, op.r, op.fn);
    }
  }
  qrmq::QuantumRmq::write_traces(tree.traces(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Range-minimum structures with a metered minimum-finding oracle"};
  app.require_subcommand(1);

  std::uint64_t trials = 200, n_max = 4096, seed = 1;
  bool inject_fault = false;
  CLI::App* verify = app.add_subcommand("verify", "Differential check against brute force");
  verify->add_option("--trials", trials, "Number of seeded workloads");
  verify->add_option("--n-max", n_max, "Largest array length");
  verify->add_option("--seed", seed, "Master seed");
  verify->add_flag("--inject-fault", inject_fault, "Corrupt one answer to prove detection")
      ->group("");  // hidden; harness self-test only

  std::vector<std::uint64_t> ns{1024}, qs{16};
  double eps = 0.1;
  std::uint64_t seeds = 3;
  std::string out_path, in_path, axis = "q", ops_path, array_path;
  CLI::App* bench = app.add_subcommand("bench", "Ledger counts over an (n, q) grid");
  bench->add_option("--n", ns, "Array lengths")->delimiter(',');
  bench->add_option("--q", qs, "Operation counts")->delimiter(',');
  bench->add_option("--eps", eps, "Total failure budget");
  bench->add_option("--seeds", seeds, "Seeds per cell");
  bench->add_option("--seed", seed, "First seed value");
  bench->add_option("--out", out_path, "Output CSV path")->required();

  CLI::App* fit = app.add_subcommand("fit", "Log-log slope of quantum_queries");
  fit->add_option("--in", in_path, "Input CSV path")->required();
  fit->add_option("--axis", axis, "Sweep axis")->check(CLI::IsMember({"q", "n"}));

  std::uint64_t trace_n = 8;
  CLI::App* trace = app.add_subcommand("trace", "Creation traces for an op file");
  trace->add_option("--n", trace_n, "Array length");
  trace->add_option("--ops", ops_path, "Op file path")->required();
  trace->add_option("--out", out_path, "Output trace path")->required();
  trace->add_option("--array", array_path, "Array fixture path (default: seeded random)");
  trace->add_option("--eps", eps, "Total failure budget");
  trace->add_option("--seed", seed, "Array seed when no fixture is given");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(trials, n_max, seed, inject_fault);
    if (bench->parsed()) return cmd_bench(ns, qs, eps, seeds, seed, out_path);
    if (fit->parsed()) return cmd_fit(in_path, axis);
    if (trace->parsed()) return cmd_trace(trace_n, ops_path, out_path, array_path, eps, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
