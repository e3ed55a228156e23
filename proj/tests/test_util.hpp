#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "entwidth/entwidth.hpp"

namespace testutil {

// Erdos-Renyi style weighted graph; guaranteed at least one edge.
inline entwidth::WeightedGraph random_graph(std::mt19937& rng, int n, double edge_prob,
                                            double strength_lo, double strength_hi) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> strength(strength_lo, strength_hi);
  entwidth::WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_prob) g.add_edge(i, j, strength(rng));
  if (g.n_edges() == 0) {
    std::uniform_int_distribution<int> pick(1, n - 1);
    g.add_edge(0, pick(rng), strength(rng));
  }
  return g;
}

// Uniform-strength variant for physical/canonical comparisons.
inline entwidth::WeightedGraph random_unit_graph(std::mt19937& rng, int n,
                                                 double edge_prob) {
  return random_graph(rng, n, edge_prob, 1.0, 1.0);
}

inline entwidth::Bipartition random_bipartition(std::mt19937& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> dist(1, (std::uint64_t{1} << n) - 2);
  return entwidth::Bipartition::from_mask(dist(rng), n);
}

// Random symplectic built from CZ shears, single-mode squeezes and the
// global Fourier rotation (which is the symplectic form itself).
inline entwidth::SymplecticMatrix random_symplectic(std::mt19937& rng, int n,
                                                    int n_factors = 6) {
  std::uniform_int_distribution<int> mode(0, n - 1);
  std::uniform_real_distribution<double> zeta(-0.8, 0.8);
  std::uniform_real_distribution<double> strength(0.2, 2.0);
  std::uniform_int_distribution<int> kind(0, 2);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  for (int k = 0; k < n_factors; ++k) {
    switch (kind(rng)) {
      case 0: {
        int i = mode(rng), j = mode(rng);
        if (i == j) j = (j + 1) % n;
        s = entwidth::cz_symplectic(i, j, strength(rng), n).matrix() * s;
        break;
      }
      case 1:
        s = entwidth::squeeze_symplectic(mode(rng), zeta(rng), n).matrix() * s;
        break;
      default:
        s = entwidth::symplectic_form(n) * s;
        break;
    }
  }
  return entwidth::SymplecticMatrix(s);
}

}  // namespace testutil
