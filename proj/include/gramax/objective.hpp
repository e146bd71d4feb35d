#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "gramax/error.hpp"
#include "gramax/linops.hpp"

namespace gramax {

/// General: box -1 <= B <= 1. Metzler: A has nonnegative off-diagonals and
/// the box is 0 <= B <= 1.
enum class ProblemMode { General, Metzler };

inline const char* to_string(ProblemMode mode) {
  return mode == ProblemMode::General ? "general" : "metzler";
}

/// First negative off-diagonal entry of A in row-major order, if any.
inline std::optional<std::pair<Index, Index>> find_metzler_violation(const Matrix& A) {
  for (Index i = 0; i < A.rows(); ++i) {
    for (Index j = 0; j < A.cols(); ++j) {
      if (i != j && A(i, j) < 0.0) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

inline bool is_metzler(const Matrix& A) { return !find_metzler_violation(A).has_value(); }

/// A problem family (A, T, mode) with H(A,T) and L(A,T) computed once.
/// Immutable after construction.
class ProblemInstance {
public:
  ProblemInstance(Matrix A, Horizon T, ProblemMode mode)
      : A_(std::move(A)), T_(T), mode_(mode) {
    detail::require_square(A_, "A");
    detail::require_finite(A_, "A");
    if (mode_ == ProblemMode::Metzler) {
      if (auto bad = find_metzler_violation(A_)) {
        throw MetzlerViolation(static_cast<std::size_t>(bad->first),
                               static_cast<std::size_t>(bad->second),
                               A_(bad->first, bad->second));
      }
    }
    H_ = gramian_H(A_, T_);
    L_ = lipschitz_L(H_);
  }

  const Matrix& A() const noexcept { return A_; }
  Horizon horizon() const noexcept { return T_; }
  ProblemMode mode() const noexcept { return mode_; }
  const Matrix& H() const noexcept { return H_; }
  double lipschitz() const noexcept { return L_; }
  Index n() const noexcept { return A_.rows(); }

private:
  Matrix A_;
  Horizon T_;
  ProblemMode mode_;
  Matrix H_;
  double L_ = 0.0;
};

inline ProblemInstance make_instance(Matrix A, Horizon T, ProblemMode mode) {
  return ProblemInstance(std::move(A), T, mode);
}

namespace detail {
inline void require_input_shape(const ProblemInstance& inst, const Matrix& B) {
  if (B.rows() != inst.n() || B.cols() == 0) {
    throw DimensionError("B must be " + std::to_string(inst.n()) + "xm with m >= 1, got " +
                         shape(B));
  }
}
}  // namespace detail

/// h(B) = tr(B B^T H) = -tr(C_T(B)).
inline double h_value(const ProblemInstance& inst, const Matrix& B) {
  detail::require_input_shape(inst, B);
  return (inst.H() * B).cwiseProduct(B).sum();
}

/// grad h(B) = 2 H B.
inline Matrix h_gradient(const ProblemInstance& inst, const Matrix& B) {
  detail::require_input_shape(inst, B);
  return 2.0 * (inst.H() * B);
}

struct GramianSpectrum {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double trace = 0.0;
  std::size_t rank = 0;
};

/// Spectral diagnostics of C_T(B). Eigenvalues are clipped at zero.
inline GramianSpectrum gramian_spectrum(const ProblemInstance& inst, const Matrix& B,
                                        double rel_tol = 1e-9) {
  detail::require_input_shape(inst, B);
  const Matrix C = controllability_gramian(inst.A(), B, inst.horizon());
  const Eigen::VectorXd eig = symmetric_eigenvalues(C).cwiseMax(0.0);
  GramianSpectrum out;
  out.lambda_min = eig.minCoeff();
  out.lambda_max = eig.maxCoeff();
  out.trace = eig.sum();
  out.rank = numerical_rank(C, rel_tol);
  return out;
}

}  // namespace gramax
