#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "gramax/networks.hpp"
#include "gramax/objective.hpp"
#include "gramax/projections.hpp"

namespace gramax {
namespace {

TEST(SparseNormal, FullDensitySampleMean) {
  const Matrix A = gen_sparse_normal(100, 1.0, 3);
  EXPECT_EQ(count_nonzeros(A), 10000u);
  EXPECT_LT(std::abs(A.mean()), 4.0 / 100.0);
}

TEST(SparseNormal, DeterministicPerSeed) {
  EXPECT_EQ(gen_sparse_normal(30, 0.2, 9), gen_sparse_normal(30, 0.2, 9));
  EXPECT_NE(gen_sparse_normal(30, 0.2, 9), gen_sparse_normal(30, 0.2, 10));
}

TEST(SparseNormal, NonzeroCount) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto nnz = count_nonzeros(gen_sparse_normal(50, 0.1, seed));
    EXPECT_GE(nnz, 225u);
    EXPECT_LE(nnz, 275u);
  }
}

TEST(SparseNormal, InvalidDensity) {
  EXPECT_THROW(gen_sparse_normal(10, 0.0, 1), ConfigError);
  EXPECT_THROW(gen_sparse_normal(10, 1.5, 1), ConfigError);
  EXPECT_THROW(gen_sparse_uniform(10, -0.1, 1), ConfigError);
}

TEST(SparseUniform, MetzlerOpenUnitInterval) {
  const Matrix A = gen_sparse_uniform(40, 0.2, 5);
  EXPECT_TRUE(is_metzler(A));
  EXPECT_NO_THROW(make_instance(A * 0.1, Horizon(1.0), ProblemMode::Metzler));
  for (Index i = 0; i < A.size(); ++i) {
    const double v = A.data()[i];
    if (v != 0.0) {
      EXPECT_GT(v, 0.0);
      EXPECT_LT(v, 1.0);
    }
  }
  EXPECT_EQ(A, gen_sparse_uniform(40, 0.2, 5));
}

std::set<std::pair<Index, Index>> undirected(const std::vector<Edge>& edges) {
  std::set<std::pair<Index, Index>> out;
  for (auto [u, v] : edges) out.emplace(std::min(u, v), std::max(u, v));
  return out;
}

TEST(WattsStrogatz, RingLatticeWithoutRewiring) {
  const Matrix A = gen_watts_strogatz(20, 6, 0.0, WeightMode::Unit, 1);
  for (Index i = 0; i < 20; ++i) {
    EXPECT_EQ(static_cast<int>((A.row(i).array() != 0.0).count()), 6);
    EXPECT_EQ(A(i, (i + 3) % 20), 1.0);
    EXPECT_EQ(A(i, (i + 4) % 20), 0.0);
  }
  EXPECT_EQ(A, A.transpose());
}

TEST(WattsStrogatz, EdgeCountConserved) {
  for (double p : {0.0, 0.05, 0.5, 1.0}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto edges = watts_strogatz_edges(50, 6, p, seed);
      EXPECT_EQ(edges.size(), 150u);
      EXPECT_EQ(undirected(edges).size(), 150u) << "duplicate edge, p = " << p;
      for (auto [u, v] : edges) EXPECT_NE(u, v);
      const Matrix A = gen_watts_strogatz(50, 6, p, WeightMode::Unit, seed);
      EXPECT_EQ(count_nonzeros(A), 300u);
      EXPECT_EQ(A.diagonal().cwiseAbs().sum(), 0.0);
    }
  }
}

TEST(WattsStrogatz, WeightModes) {
  const Matrix U = gen_watts_strogatz(50, 6, 0.05, WeightMode::Uniform01, 7);
  EXPECT_TRUE(is_metzler(U));
  EXPECT_EQ(U, U.transpose());
  EXPECT_GT(U.maxCoeff(), 0.0);
  EXPECT_LT(U.maxCoeff(), 1.0);

  const Matrix N = gen_watts_strogatz(50, 6, 0.05, WeightMode::Normal, 7);
  EXPECT_LT(N.minCoeff(), 0.0);
  EXPECT_EQ(N, gen_watts_strogatz(50, 6, 0.05, WeightMode::Normal, 7));

  const Matrix Asym = gen_watts_strogatz(50, 6, 0.05, WeightMode::Normal, 7, false);
  EXPECT_NE(Asym, Asym.transpose());
  EXPECT_EQ((Asym.array() != 0.0).matrix(), (N.array() != 0.0).matrix());
}

TEST(WattsStrogatz, ParameterErrors) {
  EXPECT_THROW(watts_strogatz_edges(10, 5, 0.1, 0), ConfigError);
  EXPECT_THROW(watts_strogatz_edges(6, 6, 0.1, 0), ConfigError);
  EXPECT_THROW(watts_strogatz_edges(10, 4, 1.5, 0), ConfigError);
}

TEST(GenerateNetwork, Dispatch) {
  NetworkSpec spec;
  spec.kind = NetworkKind::WattsStrogatz;
  spec.n = 12;
  spec.avg_degree = 4;
  spec.weight_mode = WeightMode::Uniform01;
  spec.seed = 3;
  EXPECT_EQ(generate_network(spec), gen_watts_strogatz(12, 4, 0.05, WeightMode::Uniform01, 3));
  spec.kind = NetworkKind::SparseUniform;
  EXPECT_EQ(generate_network(spec), gen_sparse_uniform(12, 0.1, 3));
}

}  // namespace
}  // namespace gramax
