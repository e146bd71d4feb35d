#pragma once

// Command-line front end shared by the gramax executable and the tests.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gramax/gramax.hpp"

namespace gramax::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kConstraint = 3, kNumeric = 4 };

namespace detail {

struct SolveFlags {
  std::string a_file;
  std::string mode = "general";
  long long m = 1;
  double T = 10.0;
  double step_factor = 1.1;
  double tol = 1e-8;
  std::size_t max_iter = 100000;
  std::optional<std::uint64_t> seed;
  std::string init = "random";
  std::string init_file;
  std::optional<double> rescale_a;
  double rank_tol = 1e-9;
};

inline void add_solve_flags(CLI::App& cmd, SolveFlags& f) {
  cmd.add_option("A", f.a_file, "State matrix file (dense text format)")->required();
  cmd.add_option("--mode", f.mode, "general (box [-1,1]) or metzler (box [0,1])")
      ->check(CLI::IsMember({"general", "metzler"}));
  cmd.add_option("--m", f.m, "Number of inputs (columns of B)")->check(CLI::PositiveNumber);
  cmd.add_option("--T", f.T, "Final time")->check(CLI::PositiveNumber);
  cmd.add_option("--step-factor", f.step_factor, "Step t = factor * L(A,T), factor > 1");
  cmd.add_option("--tol", f.tol, "Fixed-point residual tolerance");
  cmd.add_option("--max-iter", f.max_iter, "Iteration cap");
  cmd.add_option("--seed", f.seed, "RNG seed (falls back to $GRAMAX_SEED, then 0)");
  cmd.add_option("--init", f.init, "Initial point: random, ones or file")
      ->check(CLI::IsMember({"random", "ones", "file"}));
  cmd.add_option("--init-file", f.init_file, "Initial B for --init file");
  cmd.add_option("--rescale-A", f.rescale_a, "Multiply A by this factor before solving");
  cmd.add_option("--rank-tol", f.rank_tol, "Relative threshold for the Gramian rank");
}

inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GRAMAX_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("GRAMAX_SEED is not an unsigned integer: '") + env + "'");
  }
  return 0;
}

struct Prepared {
  ProblemInstance inst;
  Matrix B0;
  OptimizerConfig cfg;
};

inline Prepared prepare(const SolveFlags& f) {
  Matrix A = load_matrix(f.a_file);
  if (f.rescale_a) A *= *f.rescale_a;
  const ProblemMode mode = f.mode == "metzler" ? ProblemMode::Metzler : ProblemMode::General;
  ProblemInstance inst(std::move(A), Horizon(f.T), mode);

  OptimizerConfig cfg;
  cfg.step_factor = f.step_factor;
  cfg.tol = f.tol;
  cfg.max_iter = f.max_iter;
  cfg.seed = resolve_seed(f.seed);
  if (f.init == "ones") {
    cfg.init = OnesInit{};
  } else if (f.init == "file") {
    if (f.init_file.empty()) throw ConfigError("--init file requires --init-file");
    cfg.init = GivenInit{load_matrix(f.init_file)};
  }
  cfg.validate();
  Matrix B0 = init_B(inst.n(), static_cast<Index>(f.m), mode, cfg.init, cfg.seed);
  return {std::move(inst), std::move(B0), std::move(cfg)};
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

// Parses "5,10,15" or "a:b" / "a:b:step".
inline std::vector<std::size_t> parse_s_values(const std::string& list, const std::string& range) {
  std::vector<std::size_t> out;
  auto to_size = [](const std::string& tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad sparsity value '" + tok + "'");
    }
    if (used != tok.size() || v < 1) throw ConfigError("bad sparsity value '" + tok + "'");
    return static_cast<std::size_t>(v);
  };
  if (!list.empty()) {
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(to_size(tok));
  } else if (!range.empty()) {
    std::vector<std::size_t> parts;
    std::stringstream ss(range);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(to_size(tok));
    if (parts.size() < 2 || parts.size() > 3 || parts[0] > parts[1]) {
      throw ConfigError("--s-range must look like a:b or a:b:step with a <= b");
    }
    const std::size_t step = parts.size() == 3 ? parts[2] : 1;
    for (std::size_t s = parts[0]; s <= parts[1]; s += step) out.push_back(s);
  }
  return out;
}

}  // namespace detail

inline int cmd_generate(const NetworkSpec& spec, const std::string& out_file, std::ostream& out,
                        std::ostream& err) {
  const Matrix A = generate_network(spec);
  if (out_file.empty()) {
    write_matrix(out, A);
  } else {
    save_matrix(out_file, A);
  }
  std::ostream& info = out_file.empty() ? err : out;
  info << "n = " << A.rows() << '\n'
       << "nnz = " << count_nonzeros(A) << '\n'
       << "metzler = " << (is_metzler(A) ? "yes" : "no") << '\n';
  return kOk;
}

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse actuator design maximizing the trace of the controllability Gramian",
               "gramax"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random network state matrix");
  std::string g_kind = "sparse-normal", g_weights = "normal", g_out;
  NetworkSpec spec;
  long long g_n = 0, g_deg = 6;
  std::optional<std::uint64_t> g_seed;
  bool g_asym = false;
  gen->add_option("--kind", g_kind, "sparse-normal, sparse-uniform or ws")
      ->check(CLI::IsMember({"sparse-normal", "sparse-uniform", "ws"}));
  gen->add_option("--n", g_n, "Number of nodes")->required()->check(CLI::PositiveNumber);
  gen->add_option("--density", spec.density, "Fraction of nonzero entries (sparse kinds)");
  gen->add_option("--avg-degree", g_deg, "Average degree (ws, even)");
  gen->add_option("--rewire-p", spec.rewire_p, "Rewiring probability (ws)");
  gen->add_option("--weights", g_weights, "Edge weights (ws): normal, uniform01 or unit")
      ->check(CLI::IsMember({"normal", "uniform01", "unit"}));
  gen->add_flag("--asymmetric", g_asym, "Draw A_ij and A_ji independently (ws)");
  gen->add_option("--seed", g_seed, "RNG seed (falls back to $GRAMAX_SEED, then 0)");
  gen->add_option("-o,--output", g_out, "Output matrix file (stdout if omitted)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one sparsity-constrained problem");
  detail::SolveFlags sf;
  long long s_budget = 0;
  std::optional<double> beta;
  std::string b_out;
  detail::add_solve_flags(*solve, sf);
  solve->add_option("--s", s_budget, "Sparsity budget, 1 <= s <= n*m")->required();
  solve->add_option("--beta", beta, "Scale the solution to the box [-beta, beta]")
      ->check(CLI::PositiveNumber);
  solve->add_option("-o,--output", b_out, "Write B* to this file");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Solve over a range of sparsity budgets");
  detail::SolveFlags wf;
  std::string s_list, s_range, csv_out, plot_out;
  std::size_t grid_count = 20;
  unsigned threads = 1;
  detail::add_solve_flags(*sweep, wf);
  auto* list_opt = sweep->add_option("--s-list", s_list, "Comma-separated budgets");
  sweep->add_option("--s-range", s_range, "Budgets a:b or a:b:step")->excludes(list_opt);
  sweep->add_option("--grid-count", grid_count, "Evenly spaced budgets in 1..n when no list");
  sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("-o,--output", csv_out, "CSV output file (stdout if omitted)");
  sweep->add_option("--plot", plot_out, "Write an SVG plot of -h(B) against s");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      spec.n = static_cast<Index>(g_n);
      spec.avg_degree = static_cast<Index>(g_deg);
      spec.seed = detail::resolve_seed(g_seed);
      spec.symmetric_weights = !g_asym;
      spec.kind = g_kind == "ws"               ? NetworkKind::WattsStrogatz
                  : g_kind == "sparse-uniform" ? NetworkKind::SparseUniform
                                               : NetworkKind::SparseNormal;
      spec.weight_mode = g_weights == "uniform01" ? WeightMode::Uniform01
                         : g_weights == "unit"    ? WeightMode::Unit
                                                  : WeightMode::Normal;
      return cmd_generate(spec, g_out, out, err);
    }

    if (solve->parsed()) {
      auto p = detail::prepare(sf);
      if (s_budget < 1) throw InvalidBudgetError("sparsity budget s must be at least 1");
      const SparsityBudget s(static_cast<std::size_t>(s_budget));
      const SolveResult res = solve_from(p.inst, s, p.B0, p.cfg);
      const SweepRow row = summarize(p.inst, s.value(), res, sf.rank_tol);
      const Matrix B = beta ? Matrix(*beta * res.B) : res.B;
      const GramianSpectrum spec_c = gramian_spectrum(p.inst, B, sf.rank_tol);
      out << "mode = " << to_string(p.inst.mode()) << '\n'
          << "n = " << p.inst.n() << '\n'
          << "m = " << B.cols() << '\n'
          << "s = " << s.value() << '\n'
          << "L = " << detail::fmt(p.inst.lipschitz()) << '\n'
          << "neg_h = " << detail::fmt(-h_value(p.inst, B)) << '\n'
          << "iterations = " << row.iterations << '\n'
          << "converged = " << (res.trace.converged ? "yes" : "no") << '\n'
          << "final_residual = " << detail::fmt(row.final_residual) << '\n'
          << "nnz = " << row.nnz << '\n'
          << "gramian_rank = " << spec_c.rank << '\n'
          << "lambda_min = " << detail::fmt(spec_c.lambda_min) << '\n'
          << "lambda_max = " << detail::fmt(spec_c.lambda_max) << '\n';
      if (beta) out << "beta = " << detail::fmt(*beta) << '\n';
      if (b_out.empty()) {
        out << "B =\n";
        write_matrix(out, B);
      } else {
        save_matrix(b_out, B);
      }
      return kOk;
    }

    if (sweep->parsed()) {
      auto p = detail::prepare(wf);
      std::vector<std::size_t> s_values = detail::parse_s_values(s_list, s_range);
      if (s_values.empty()) s_values = default_s_grid(static_cast<std::size_t>(p.inst.n()), grid_count);
      const SweepOutput res = run_sweep(p.inst, p.B0, s_values, p.cfg, threads, wf.rank_tol);

      if (csv_out.empty()) {
        write_csv(out, res.result);
      } else {
        std::ofstream os(csv_out);
        if (!os) throw ParseError("cannot open '" + csv_out + "' for writing");
        write_csv(os, res.result);
      }
      std::ostream& info = csv_out.empty() ? err : out;
      const bool monotone = is_non_decreasing(res.result);
      std::size_t max_rank = 0;
      for (const auto& r : res.result.rows) max_rank = std::max(max_rank, r.gramian_rank);
      info << "rows = " << res.result.rows.size() << '\n'
           << "neg_h non-decreasing in s = " << (monotone ? "yes" : "no") << '\n'
           << "max gramian rank = " << max_rank << '\n';
      if (!monotone && p.inst.mode() == ProblemMode::Metzler) {
        info << "warning: -h(B) decreased between consecutive budgets (metzler mode)\n";
      }
      if (!plot_out.empty()) {
        PlotSeries series{wf.a_file, {}, {}};
        for (const auto& r : res.result.rows) {
          series.x.push_back(static_cast<double>(r.s));
          series.y.push_back(r.neg_h);
        }
        std::ofstream os(plot_out);
        if (!os) throw ParseError("cannot open '" + plot_out + "' for writing");
        os << render_line_chart({series}, std::string("controllability index (") +
                                              to_string(p.inst.mode()) + ")",
                                "s", "-h(B)");
      }
      return kOk;
    }
  } catch (const MetzlerViolation& e) {
    err << "error: " << e.what() << '\n';
    return kConstraint;
  } catch (const ZeroInitError& e) {
    err << "error: " << e.what() << '\n';
    return kConstraint;
  } catch (const NumericOverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gramax::cli
