#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gramax/error.hpp"
#include "gramax/objective.hpp"
#include "gramax/optimizer.hpp"
#include "gramax/projections.hpp"

namespace gramax {

struct SweepRow {
  std::size_t s = 0;
  double neg_h = 0.0;  // -h(B*) = tr(C_T(B*))
  std::size_t iterations = 0;
  double final_residual = 0.0;
  std::size_t gramian_rank = 0;
  std::size_t nnz = 0;

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;

  bool operator==(const SweepResult&) const = default;
};

inline constexpr const char* kSweepCsvHeader =
    "s,neg_h,iterations,final_residual,gramian_rank,nnz";

/// Summary row for a finished solve.
inline SweepRow summarize(const ProblemInstance& inst, std::size_t s, const SolveResult& res,
                          double rank_tol = 1e-9) {
  SweepRow row;
  row.s = s;
  row.neg_h = std::max(0.0, -h_value(inst, res.B));
  row.iterations = res.trace.iterations;
  row.final_residual =
      res.trace.residual_history.empty() ? 0.0 : res.trace.residual_history.back();
  row.gramian_rank =
      numerical_rank(controllability_gramian(inst.A(), res.B, inst.horizon()), rank_tol);
  row.nnz = count_nonzeros(res.B);
  return row;
}

/// Up to `count` evenly spaced budgets in {1..n}, deduplicated, ascending.
inline std::vector<std::size_t> default_s_grid(std::size_t n, std::size_t count = 20) {
  std::vector<std::size_t> grid;
  if (n == 0 || count == 0) return grid;
  if (count == 1 || n == 1) return {n};
  for (std::size_t k = 0; k < count; ++k) {
    const double x = 1.0 + static_cast<double>(k) * static_cast<double>(n - 1) /
                               static_cast<double>(count - 1);
    grid.push_back(static_cast<std::size_t>(std::llround(x)));
  }
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

struct SweepOutput {
  SweepResult result;
  std::vector<SolveResult> solutions;  // parallel to result.rows
};

/// One solve per budget, every solve starting from the same B0 projected onto
/// its own feasible set. Rows come back in the order of s_values regardless
/// of thread scheduling.
inline SweepOutput run_sweep(const ProblemInstance& inst, const Matrix& B0,
                             const std::vector<std::size_t>& s_values,
                             const OptimizerConfig& cfg, unsigned threads = 1,
                             double rank_tol = 1e-9) {
  cfg.validate();
  for (std::size_t s : s_values) detail::require_budget(B0, SparsityBudget(s));

  SweepOutput out;
  out.result.rows.resize(s_values.size());
  out.solutions.resize(s_values.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t i = next++; i < s_values.size(); i = next++) {
      try {
        const SparsityBudget s(s_values[i]);
        out.solutions[i] = solve_from(inst, s, B0, cfg);
        out.result.rows[i] = summarize(inst, s_values[i], out.solutions[i], rank_tol);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = s_values.size();
      }
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(s_values.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline void write_csv(std::ostream& os, const SweepResult& result) {
  os << kSweepCsvHeader << '\n';
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& r : result.rows) {
    os << r.s << ',' << r.neg_h << ',' << r.iterations << ',' << r.final_residual << ','
       << r.gramian_rank << ',' << r.nnz << '\n';
  }
}

inline SweepResult read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepCsvHeader) {
    throw ParseError(std::string("CSV header must be '") + kSweepCsvHeader + "'");
  }
  SweepResult result;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    SweepRow r;
    char c1, c2, c3, c4, c5;
    if (!(ls >> r.s >> c1 >> r.neg_h >> c2 >> r.iterations >> c3 >> r.final_residual >> c4 >>
          r.gramian_rank >> c5 >> r.nnz) ||
        c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',' || c5 != ',') {
      throw ParseError("malformed CSV row at line " + std::to_string(lineno));
    }
    result.rows.push_back(r);
  }
  return result;
}

/// True when neg_h never drops by more than rel_slack * |previous| from one
/// row to the next.
inline bool is_non_decreasing(const SweepResult& result, double rel_slack = 1e-12) {
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    const double prev = result.rows[i - 1].neg_h;
    if (result.rows[i].neg_h < prev - rel_slack * std::abs(prev)) return false;
  }
  return true;
}

}  // namespace gramax
