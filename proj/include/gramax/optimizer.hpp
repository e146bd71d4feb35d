#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "gramax/error.hpp"
#include "gramax/linops.hpp"
#include "gramax/objective.hpp"
#include "gramax/projections.hpp"

namespace gramax {

/// Entries i.i.d. uniform over the mode's box ([-1,1] or [0,1]).
struct UniformRandomInit {};
/// The all-ones matrix E.
struct OnesInit {};
/// A caller-supplied starting point; must be nonzero.
struct GivenInit {
  Matrix B;
};

using InitStrategy = std::variant<UniformRandomInit, OnesInit, GivenInit>;

struct OptimizerConfig {
  double step_factor = 1.1;  // t = step_factor * L(A,T)
  double tol = 1e-8;         // stop once ||B_{k+1} - B_k||_F <= tol
  std::size_t max_iter = 100000;
  InitStrategy init = UniformRandomInit{};
  std::uint64_t seed = 0;
  bool keep_iterates = false;

  void validate() const {
    if (!(step_factor > 1.0) || !std::isfinite(step_factor)) {
      throw ConfigError("step_factor must be > 1 so that t > L(A,T)");
    }
    if (!(tol > 0.0)) throw ConfigError("tol must be positive");
    if (max_iter < 1) throw ConfigError("max_iter must be at least 1");
  }
};

struct RunTrace {
  // h(B_0), h(B_1), ..., h(B_iterations)
  std::vector<double> objective_history;
  // ||B_{k+1} - B_k||_F for k = 0 .. iterations-1
  std::vector<double> residual_history;
  std::size_t iterations = 0;
  bool converged = false;
  double step = 0.0;  // t
  // B_0 .. B_iterations, only when OptimizerConfig::keep_iterates is set.
  std::vector<Matrix> iterates;
};

struct SolveResult {
  Matrix B;
  RunTrace trace;
};

/// Nonzero n x m starting point, feasible for the mode's box.
inline Matrix init_B(Index n, Index m, ProblemMode mode, const InitStrategy& init,
                     std::uint64_t seed) {
  if (n < 1 || m < 1) throw DimensionError("init_B needs n, m >= 1");
  return std::visit(
      [&](const auto& strategy) -> Matrix {
        using S = std::decay_t<decltype(strategy)>;
        if constexpr (std::is_same_v<S, OnesInit>) {
          return Matrix::Ones(n, m);
        } else if constexpr (std::is_same_v<S, GivenInit>) {
          if (strategy.B.rows() != n || strategy.B.cols() != m) {
            throw DimensionError("initial B must be " + std::to_string(n) + "x" +
                                 std::to_string(m) + ", got " + detail::shape(strategy.B));
          }
          detail::require_finite(strategy.B, "initial B");
          if (strategy.B.isZero(0.0)) {
            throw ZeroInitError("initial B is zero; the gradient vanishes there");
          }
          return strategy.B;
        } else {
          std::mt19937_64 rng(seed);
          const double lo = mode == ProblemMode::General ? -1.0 : 0.0;
          std::uniform_real_distribution<double> dist(lo, 1.0);
          Matrix B(n, m);
          do {
            for (Index i = 0; i < n; ++i) {
              for (Index j = 0; j < m; ++j) B(i, j) = dist(rng);
            }
          } while (B.isZero(0.0));
          return B;
        }
      },
      init);
}

/// Projected gradient iteration B_{k+1} = P(B_k - (1/t) grad h(B_k)) with
/// t = step_factor * L(A,T) and P the projection for inst.mode().
inline SolveResult pgd_solve(const ProblemInstance& inst, SparsityBudget s, const Matrix& B0,
                             const OptimizerConfig& cfg) {
  cfg.validate();
  detail::require_input_shape(inst, B0);
  detail::require_budget(B0, s);
  detail::require_finite(B0, "initial B");
  if (B0.isZero(0.0)) throw ZeroInitError("initial B is zero; the gradient vanishes there");

  const double t = cfg.step_factor * inst.lipschitz();
  const Matrix& H = inst.H();

  SolveResult out;
  RunTrace& trace = out.trace;
  trace.step = t;
  trace.objective_history.reserve(std::min<std::size_t>(cfg.max_iter, 4096) + 1);
  trace.residual_history.reserve(std::min<std::size_t>(cfg.max_iter, 4096));

  Matrix B = B0;
  trace.objective_history.push_back(h_value(inst, B));
  if (cfg.keep_iterates) trace.iterates.push_back(B);

  for (std::size_t k = 0; k < cfg.max_iter; ++k) {
    Matrix next = project_feasible(B - (2.0 / t) * (H * B), s, inst.mode());
    if (!next.allFinite()) {
      throw NumericOverflowError("iterate " + std::to_string(k + 1) + " is not finite");
    }
    const double residual = (next - B).norm();
    B = std::move(next);
    ++trace.iterations;
    trace.residual_history.push_back(residual);
    trace.objective_history.push_back(h_value(inst, B));
    if (cfg.keep_iterates) trace.iterates.push_back(B);
    if (residual <= cfg.tol) {
      trace.converged = true;
      break;
    }
  }
  out.B = std::move(B);
  return out;
}

/// Projects B0 onto the feasible set first, then runs pgd_solve. Every
/// iterate, including the first, is then feasible.
inline SolveResult solve_from(const ProblemInstance& inst, SparsityBudget s, const Matrix& B0,
                              const OptimizerConfig& cfg) {
  detail::require_input_shape(inst, B0);
  const Matrix start = project_feasible(B0, s, inst.mode());
  if (start.isZero(0.0)) {
    throw ZeroInitError("initial B projects to zero on the feasible set");
  }
  return pgd_solve(inst, s, start, cfg);
}

}  // namespace gramax
