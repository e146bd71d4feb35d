#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "gramax/error.hpp"

namespace gramax {

using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Final time of the finite-horizon Gramians. Always strictly positive.
class Horizon {
public:
  explicit Horizon(double T) : T_(T) {
    if (!(T > 0.0) || !std::isfinite(T)) {
      throw InvalidInputError("horizon T must be a positive finite number");
    }
  }
  double value() const noexcept { return T_; }

private:
  double T_;
};

namespace detail {

inline std::string shape(const Matrix& M) {
  return std::to_string(M.rows()) + "x" + std::to_string(M.cols());
}

inline void require_square(const Matrix& M, std::string_view what) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw DimensionError(std::string(what) + " must be square and non-empty, got " + shape(M));
  }
}

inline void require_finite(const Matrix& M, std::string_view what) {
  if (!M.allFinite()) {
    throw InvalidInputError(std::string(what) + " has non-finite entries");
  }
}

inline Matrix symmetrize(const Matrix& M) { return 0.5 * (M + M.transpose()); }

inline std::string fmt_norm(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// exp(M) for an already-validated square M, raising on overflow.
inline Matrix checked_exp(const Matrix& M, std::string_view what) {
  Matrix E = M.exp();
  if (!E.allFinite()) {
    const double norm1 = M.cwiseAbs().colwise().sum().maxCoeff();
    throw NumericOverflowError("matrix exponential of " + std::string(what) +
                               " overflowed (1-norm = " + fmt_norm(norm1) + ")");
  }
  return E;
}

}  // namespace detail

/// Matrix exponential by scaling and squaring with a Pade approximant.
inline Matrix expm(const Matrix& A) {
  detail::require_square(A, "expm argument");
  detail::require_finite(A, "expm argument");
  return detail::checked_exp(A, "A");
}

namespace detail {

// W(T) = int_0^T exp(M tau) Q exp(M^T tau) dtau for symmetric Q.
//
// The block exponential exp(t [[-M, Q], [0, M^T]]) = [[*, G], [0, exp(M^T t)]]
// gives W(t) = exp(M t) G. Evaluated directly at t = T the two diagonal
// blocks differ by up to exp(2 ||M|| T) and G cancels catastrophically, so it
// is taken at t = T / 2^k with ||M t||_1 <= 1/2 and then doubled k times via
// W(2t) = W(t) + exp(M t) W(t) exp(M^T t).
inline Matrix gramian_integral(const Matrix& M, const Matrix& Q, double T,
                               std::string_view what) {
  const Index n = M.rows();
  const double scaled = M.cwiseAbs().colwise().sum().maxCoeff() * T;
  int doublings = 0;
  if (scaled > 0.5) doublings = static_cast<int>(std::ceil(std::log2(scaled / 0.5)));
  const double t = std::ldexp(T, -doublings);

  Matrix block = Matrix::Zero(2 * n, 2 * n);
  block.topLeftCorner(n, n) = -t * M;
  block.topRightCorner(n, n) = t * Q;
  block.bottomRightCorner(n, n) = t * M.transpose();
  const Matrix E = checked_exp(block, what);

  Matrix phi = E.bottomRightCorner(n, n).transpose();  // exp(M t)
  Matrix W = symmetrize(phi * E.topRightCorner(n, n));
  for (int k = 0; k < doublings; ++k) {
    W = symmetrize(W + phi * W * phi.transpose());
    phi = phi * phi;
    if (!W.allFinite() || !phi.allFinite()) {
      throw NumericOverflowError(std::string(what) + " overflowed (norm ||A||_1 * T = " +
                                 fmt_norm(scaled) + ")");
    }
  }
  return W;
}

}  // namespace detail

/// H(A,T) = -int_0^T exp(A^T tau) exp(A tau) dtau, symmetric negative definite.
inline Matrix gramian_H(const Matrix& A, Horizon T) {
  detail::require_square(A, "A");
  detail::require_finite(A, "A");
  const Index n = A.rows();
  return -detail::gramian_integral(A.transpose(), Matrix::Identity(n, n), T.value(), "H(A,T)");
}

/// L(A,T) = 2 int_0^T ||exp(A tau)||_F^2 dtau = -2 tr(H).
inline double lipschitz_L(const Matrix& H) {
  detail::require_square(H, "H");
  const double tr = H.trace();
  if (!(tr < 0.0) || !std::isfinite(tr)) {
    throw InvalidInputError("H must be negative definite (trace = " + detail::fmt_norm(tr) + ")");
  }
  return -2.0 * tr;
}

/// C_T(B) = int_0^T exp(A tau) B B^T exp(A^T tau) dtau, symmetric PSD.
inline Matrix controllability_gramian(const Matrix& A, const Matrix& B, Horizon T) {
  detail::require_square(A, "A");
  if (B.rows() != A.rows() || B.cols() == 0) {
    throw DimensionError("B must have " + std::to_string(A.rows()) + " rows, got " +
                         detail::shape(B));
  }
  detail::require_finite(A, "A");
  detail::require_finite(B, "B");
  return detail::gramian_integral(A, B * B.transpose(), T.value(), "controllability Gramian");
}

/// Eigenvalues of a symmetric matrix in ascending order.
inline Eigen::VectorXd symmetric_eigenvalues(const Matrix& M) {
  detail::require_square(M, "symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(M, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericOverflowError("symmetric eigenvalue solver did not converge");
  }
  return solver.eigenvalues();
}

/// Number of singular values above rel_tol * sigma_max. Zero for the zero matrix.
inline std::size_t numerical_rank(const Matrix& M, double rel_tol = 1e-9) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw InvalidInputError("rank tolerance must lie in (0, 1)");
  }
  // Singular values of a symmetric matrix are the absolute eigenvalues.
  const Eigen::VectorXd sigma = symmetric_eigenvalues(M).cwiseAbs();
  const double sigma_max = sigma.maxCoeff();
  if (sigma_max == 0.0) return 0;
  std::size_t rank = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] > rel_tol * sigma_max) ++rank;
  }
  return rank;
}

}  // namespace gramax
