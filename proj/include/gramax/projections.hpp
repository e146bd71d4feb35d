#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "gramax/error.hpp"
#include "gramax/linops.hpp"
#include "gramax/objective.hpp"

namespace gramax {

/// Upper bound s on the number of nonzero entries of B.
class SparsityBudget {
public:
  explicit SparsityBudget(std::size_t s) : s_(s) {
    if (s == 0) throw InvalidBudgetError("sparsity budget s must be at least 1");
  }
  std::size_t value() const noexcept { return s_; }

private:
  std::size_t s_;
};

namespace detail {
inline void require_budget(const Matrix& B, SparsityBudget s) {
  const auto total = static_cast<std::size_t>(B.size());
  if (s.value() > total) {
    throw InvalidBudgetError("sparsity budget s = " + std::to_string(s.value()) +
                             " exceeds n*m = " + std::to_string(total));
  }
}
}  // namespace detail

/// Row-major linear indices (i * cols + j) of the s largest |B_ij|.
/// Ties in magnitude go to the smaller linear index. Returned in ascending order.
inline std::vector<Index> largest_support(const Matrix& B, SparsityBudget s) {
  detail::require_budget(B, s);
  const Index cols = B.cols();
  auto mag = [&](Index k) { return std::abs(B(k / cols, k % cols)); };

  std::vector<Index> idx(static_cast<std::size_t>(B.size()));
  std::iota(idx.begin(), idx.end(), Index{0});
  const auto k = static_cast<std::ptrdiff_t>(s.value());
  if (k < static_cast<std::ptrdiff_t>(idx.size())) {
    std::nth_element(idx.begin(), idx.begin() + k - 1, idx.end(), [&](Index a, Index b) {
      const double ma = mag(a), mb = mag(b);
      return ma > mb || (ma == mb && a < b);
    });
    idx.resize(static_cast<std::size_t>(k));
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Hard thresholding: keep the s largest-magnitude entries, zero the rest.
inline Matrix project_sparse(const Matrix& B, SparsityBudget s) {
  Matrix out = Matrix::Zero(B.rows(), B.cols());
  const Index cols = B.cols();
  for (Index k : largest_support(B, s)) {
    out(k / cols, k % cols) = B(k / cols, k % cols);
  }
  return out;
}

/// Clamp to [-1, 1].
inline Matrix project_box_sym(const Matrix& B) { return B.cwiseMax(-1.0).cwiseMin(1.0); }

inline Matrix project_nonneg(const Matrix& B) { return B.cwiseMax(0.0); }

inline Matrix project_le_one(const Matrix& B) { return B.cwiseMin(1.0); }

/// Projection onto {||X||_0 <= s, -1 <= X <= 1}: box clamp after thresholding.
inline Matrix project_problem1(const Matrix& B, SparsityBudget s) {
  return project_box_sym(project_sparse(B, s));
}

/// Projection onto {||X||_0 <= s, 0 <= X <= 1}: clip negatives, threshold,
/// then clip above at one.
inline Matrix project_problem2(const Matrix& B, SparsityBudget s) {
  return project_le_one(project_sparse(project_nonneg(B), s));
}

inline Matrix project_feasible(const Matrix& B, SparsityBudget s, ProblemMode mode) {
  return mode == ProblemMode::General ? project_problem1(B, s) : project_problem2(B, s);
}

inline std::size_t count_nonzeros(const Matrix& B) {
  return static_cast<std::size_t>((B.array() != 0.0).count());
}

}  // namespace gramax
