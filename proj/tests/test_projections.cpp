#include <gtest/gtest.h>

#include <random>

#include "gramax/projections.hpp"
#include "oracles.hpp"

namespace gramax {
namespace {

Matrix col(std::initializer_list<double> v) {
  Matrix M(static_cast<Index>(v.size()), 1);
  Index i = 0;
  for (double x : v) M(i++, 0) = x;
  return M;
}

TEST(ProjectSparse, Examples) {
  EXPECT_EQ(project_sparse(col({3, -4}), SparsityBudget(1)), col({0, -4}));
  std::mt19937_64 rng(1);
  const Matrix R = oracle::random_normal(3, 2, rng);
  EXPECT_EQ(project_sparse(R, SparsityBudget(6)), R);
}

TEST(ProjectSparse, TieBreakIsRowMajor) {
  Matrix B(2, 2);
  B << 1, -1, 2, 2;
  Matrix want2(2, 2), want3(2, 2);
  want2 << 0, 0, 2, 2;
  want3 << 1, 0, 2, 2;
  EXPECT_EQ(project_sparse(B, SparsityBudget(2)), want2);
  EXPECT_EQ(project_sparse(B, SparsityBudget(3)), want3);
  // The unconstrained-box oracle attains the same distances.
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ((want2 - B).squaredNorm(), oracle::brute_project(B, 2, -inf, inf).dist2);
  EXPECT_EQ((want3 - B).squaredNorm(), oracle::brute_project(B, 3, -inf, inf).dist2);
}

TEST(ProjectSparse, BudgetErrors) {
  EXPECT_THROW(SparsityBudget(0), InvalidBudgetError);
  EXPECT_THROW(project_sparse(Matrix::Ones(2, 2), SparsityBudget(5)), InvalidBudgetError);
  EXPECT_THROW(project_problem1(Matrix::Ones(2, 1), SparsityBudget(3)), InvalidBudgetError);
}

TEST(ElementwiseProjections, Examples) {
  EXPECT_EQ(project_box_sym(col({3, -4})), col({1, -1}));
  Matrix row(1, 2), clamped(1, 2);
  row << 1.5, -0.5;
  clamped << 1, -0.5;
  EXPECT_EQ(project_box_sym(row), clamped);
  EXPECT_EQ(project_box_sym(col({0.3, -1, 1})), col({0.3, -1, 1}));

  EXPECT_EQ(project_nonneg(col({3, -4})), col({3, 0}));
  EXPECT_EQ(project_nonneg(col({0, 2})), col({0, 2}));
  EXPECT_EQ(project_nonneg(-Matrix::Ones(2, 3)), Matrix::Zero(2, 3));

  EXPECT_EQ(project_le_one(col({3, 0})), col({1, 0}));
  EXPECT_EQ(project_le_one(col({-5, 1})), col({-5, 1}));
  EXPECT_EQ(project_le_one(2.0 * Matrix::Ones(2, 2)), Matrix::Ones(2, 2));
}

TEST(CompositeProjections, CounterexampleDistances) {
  const Matrix B = col({3, -4});
  const SparsityBudget one(1);

  const Matrix p1 = project_problem1(B, one);
  EXPECT_EQ(p1, col({0, -1}));
  EXPECT_EQ((p1 - B).squaredNorm(), 18.0);
  EXPECT_EQ((project_sparse(project_box_sym(B), one) - B).squaredNorm(), 20.0);

  const Matrix p2 = project_problem2(B, one);
  EXPECT_EQ(p2, col({1, 0}));
  EXPECT_EQ((p2 - B).squaredNorm(), 20.0);
  EXPECT_EQ((project_nonneg(project_sparse(project_le_one(B), one)) - B).squaredNorm(), 25.0);
}

TEST(CompositeProjections, FeasibleInputsUnchanged) {
  Matrix B(3, 1);
  B << 0.5, 0, -1;
  EXPECT_EQ(project_problem1(B, SparsityBudget(2)), B);
  Matrix C(2, 2);
  C << 0, 1, 0.25, 0;
  EXPECT_EQ(project_problem2(C, SparsityBudget(2)), C);
}

TEST(CompositeProjections, MatchBruteForceOnThreeByThree) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix B = oracle::random_normal(3, 3, rng, 1.5);
    const auto want1 = oracle::brute_project(B, 4, -1.0, 1.0);
    EXPECT_NEAR((project_problem1(B, SparsityBudget(4)) - B).squaredNorm(), want1.dist2, 1e-12);
    const auto want2 = oracle::brute_project(B, 3, 0.0, 1.0);
    EXPECT_NEAR((project_problem2(B, SparsityBudget(3)) - B).squaredNorm(), want2.dist2, 1e-12);
  }
}

TEST(CompositeProjections, OptimalIdempotentFeasible) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Index n = dim(rng), m = dim(rng);
    while (n * m > 12) m = dim(rng);
    const Matrix B = oracle::random_normal(n, m, rng, 1.2);
    for (std::size_t s = 1; s <= static_cast<std::size_t>(n * m); ++s) {
      const SparsityBudget budget(s);
      const Matrix p1 = project_problem1(B, budget);
      const Matrix p2 = project_problem2(B, budget);
      EXPECT_LE(count_nonzeros(p1), s);
      EXPECT_LE(count_nonzeros(p2), s);
      EXPECT_LE(p1.cwiseAbs().maxCoeff(), 1.0);
      EXPECT_GE(p2.minCoeff(), 0.0);
      EXPECT_LE(p2.maxCoeff(), 1.0);
      EXPECT_EQ(project_problem1(p1, budget), p1);
      EXPECT_EQ(project_problem2(p2, budget), p2);
      EXPECT_NEAR((p1 - B).squaredNorm(), oracle::brute_project(B, s, -1, 1).dist2, 1e-12);
      EXPECT_NEAR((p2 - B).squaredNorm(), oracle::brute_project(B, s, 0, 1).dist2, 1e-12);
    }
  }
}

TEST(CompositeProjections, RestrictedNormIdentity) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + trial % 4, m = 1 + trial % 3;
    const Matrix B = oracle::random_normal(n, m, rng);
    const Matrix X = oracle::random_normal(n, m, rng);
    const SparsityBudget s(1 + static_cast<std::size_t>(trial) % static_cast<std::size_t>(n * m));
    const auto support = largest_support(B, s);
    const auto rest = oracle::complement(support, n * m);
    const double lhs = oracle::restricted_sq_norm(X - B, support) +
                       oracle::restricted_sq_norm(X, rest);
    EXPECT_NEAR(lhs, (X - project_sparse(B, s)).squaredNorm(), 1e-12);
  }
}

}  // namespace
}  // namespace gramax
