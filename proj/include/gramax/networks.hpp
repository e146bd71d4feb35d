#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gramax/error.hpp"
#include "gramax/linops.hpp"

namespace gramax {

enum class NetworkKind { SparseNormal, SparseUniform, WattsStrogatz };

/// Edge weights of a Watts-Strogatz network. Unit gives a 0/1 adjacency.
enum class WeightMode { Normal, Uniform01, Unit };

struct NetworkSpec {
  NetworkKind kind = NetworkKind::SparseNormal;
  Index n = 0;
  double density = 0.1;
  Index avg_degree = 6;
  double rewire_p = 0.05;
  WeightMode weight_mode = WeightMode::Normal;
  bool symmetric_weights = true;
  std::uint64_t seed = 0;
};

namespace detail {

inline void require_density(Index n, double density) {
  if (n < 1) throw ConfigError("network size n must be at least 1");
  if (!(density > 0.0 && density <= 1.0)) throw ConfigError("density must lie in (0, 1]");
}

// Uniform on the open interval (0, 1).
inline double open_uniform(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  double v = 0.0;
  while (v == 0.0) v = dist(rng);
  return v;
}

// round(density * n^2) distinct positions (at least one), chosen uniformly.
template <typename Draw>
Matrix sparse_random(Index n, double density, std::uint64_t seed, Draw draw) {
  require_density(n, density);
  std::mt19937_64 rng(seed);
  const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const auto k = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(density * static_cast<double>(total))));

  std::vector<std::size_t> pos(total);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  // Partial Fisher-Yates: the first k slots become a uniform k-subset.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, total - 1);
    std::swap(pos[i], pos[pick(rng)]);
  }
  std::sort(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(k));

  Matrix A = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    const auto p = static_cast<Index>(pos[i]);
    A(p / n, p % n) = draw(rng);
  }
  return A;
}

}  // namespace detail

/// Sparse n x n matrix, standard normal values at uniformly random positions.
inline Matrix gen_sparse_normal(Index n, double density, std::uint64_t seed) {
  return detail::sparse_random(n, density, seed, [](std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    double v = 0.0;
    while (v == 0.0) v = normal(rng);
    return v;
  });
}

/// Sparse n x n matrix with values uniform on (0, 1); always Metzler.
inline Matrix gen_sparse_uniform(Index n, double density, std::uint64_t seed) {
  return detail::sparse_random(n, density, seed, detail::open_uniform);
}

using Edge = std::pair<Index, Index>;

/// Undirected edge list of a Watts-Strogatz graph: ring lattice with
/// avg_degree/2 neighbours per side, each edge rewired with probability
/// rewire_p. A rewire that cannot find a free endpoint within n tries keeps
/// the original edge.
inline std::vector<Edge> watts_strogatz_edges(Index n, Index avg_degree, double rewire_p,
                                              std::uint64_t seed) {
  if (n < 1) throw ConfigError("network size n must be at least 1");
  if (avg_degree < 2 || avg_degree % 2 != 0 || avg_degree >= n) {
    throw ConfigError("avg_degree must be even, positive and less than n");
  }
  if (!(rewire_p >= 0.0 && rewire_p <= 1.0)) throw ConfigError("rewire_p must lie in [0, 1]");

  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  auto linked = [&](Index a, Index b) -> char& {
    return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n * avg_degree / 2));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 1; j <= avg_degree / 2; ++j) {
      const Index k = (i + j) % n;
      edges.emplace_back(i, k);
      linked(i, k) = linked(k, i) = 1;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Index> node(0, n - 1);
  for (auto& [u, v] : edges) {
    if (coin(rng) >= rewire_p) continue;
    for (Index attempt = 0; attempt < n; ++attempt) {
      const Index w = node(rng);
      if (w == u || linked(u, w)) continue;
      linked(u, v) = linked(v, u) = 0;
      linked(u, w) = linked(w, u) = 1;
      v = w;
      break;
    }
  }
  return edges;
}

/// Weighted adjacency matrix of a Watts-Strogatz graph, zero diagonal.
inline Matrix gen_watts_strogatz(Index n, Index avg_degree, double rewire_p,
                                 WeightMode weight_mode, std::uint64_t seed,
                                 bool symmetric_weights = true) {
  const auto edges = watts_strogatz_edges(n, avg_degree, rewire_p, seed);
  // Weights come from a stream independent of the topology stream.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&]() {
    switch (weight_mode) {
      case WeightMode::Normal:
        return normal(rng);
      case WeightMode::Uniform01:
        return detail::open_uniform(rng);
      case WeightMode::Unit:
        break;
    }
    return 1.0;
  };

  Matrix A = Matrix::Zero(n, n);
  for (const auto& [u, v] : edges) {
    const double w = draw();
    A(u, v) = w;
    A(v, u) = symmetric_weights ? w : draw();
  }
  return A;
}

inline Matrix generate_network(const NetworkSpec& spec) {
  switch (spec.kind) {
    case NetworkKind::SparseNormal:
      return gen_sparse_normal(spec.n, spec.density, spec.seed);
    case NetworkKind::SparseUniform:
      return gen_sparse_uniform(spec.n, spec.density, spec.seed);
    case NetworkKind::WattsStrogatz:
      return gen_watts_strogatz(spec.n, spec.avg_degree, spec.rewire_p, spec.weight_mode,
                                spec.seed, spec.symmetric_weights);
  }
  throw ConfigError("unknown network kind");
}

}  // namespace gramax
