#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "entwidth/gaussian.hpp"
#include "entwidth/graph.hpp"

namespace entwidth {

// Initial per-mode squeezing. zeta < 0 squeezes the momentum quadrature;
// b = exp(-2 zeta) is the resulting bond/squeezing parameter.
struct SqueezingParams {
  double zeta;
  double b;

  static SqueezingParams from_zeta(double zeta) {
    return SqueezingParams{zeta, std::exp(-2.0 * zeta)};
  }

  static SqueezingParams from_b(double b) {
    if (!(b > 0.0)) throw std::invalid_argument("SqueezingParams: b must be positive");
    return SqueezingParams{-0.5 * std::log(b), b};
  }

  // Variance of the squeezed momentum quadrature, exp(-2|zeta|)/2.
  double momentum_variance() const { return 0.5 * std::exp(-2.0 * std::abs(zeta)); }
};

// Shear generated by exp(i B X_i X_j): identity except P_i += B X_j and
// P_j += B X_i, i.e. entries (N+j, i) = (N+i, j) = B.
inline SymplecticMatrix cz_symplectic(int i, int j, double strength, int n_modes) {
  if (i == j) throw std::invalid_argument("cz_symplectic: modes must differ");
  if (i < 0 || j < 0 || i >= n_modes || j >= n_modes)
    throw std::invalid_argument("cz_symplectic: mode index out of range");
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  s(n_modes + j, i) = strength;
  s(n_modes + i, j) = strength;
  return SymplecticMatrix(std::move(s));
}

// Single-mode squeeze with real parameter zeta: X -> e^{-zeta} X, P -> e^{zeta} P.
inline SymplecticMatrix squeeze_symplectic(int mode, double zeta, int n_modes) {
  if (mode < 0 || mode >= n_modes)
    throw std::invalid_argument("squeeze_symplectic: mode index out of range");
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  s(mode, mode) = std::exp(-zeta);
  s(n_modes + mode, n_modes + mode) = std::exp(zeta);
  return SymplecticMatrix(std::move(s));
}

namespace detail {

// Product of all CZ shears of a graph. The shears commute, so the product is
// [[I, 0], [A, I]] with A the weighted adjacency matrix, independent of order.
inline Eigen::MatrixXd cz_product(const WeightedGraph& g) {
  const int n = g.n_vertices();
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  s.bottomLeftCorner(n, n) = g.adjacency_matrix();
  return s;
}

}  // namespace detail

// Cluster state with the bond strengths absorbed into the entangling gates:
// Gamma = S_E S_E^t on the vacuum. Pure by construction.
inline GaussianState canonical_cluster(const WeightedGraph& graph) {
  return apply_symplectic(vacuum_state(graph.n_vertices()),
                          SymplecticMatrix(detail::cz_product(graph)));
}

// Cluster state as produced physically: per-mode momentum-squeezed vacua,
// Gamma_0 = diag(B,...,B, 1/B,...,1/B), entangled by unit-strength CZ gates.
inline GaussianState physical_cluster(const WeightedGraph& graph,
                                      const SqueezingParams& squeeze) {
  if (!graph.unit_strengths())
    throw std::invalid_argument("physical_cluster: all edge strengths must equal 1");
  if (!(squeeze.b > 0.0))
    throw std::invalid_argument("physical_cluster: b must be positive");
  const int n = graph.n_vertices();
  Eigen::VectorXd diag(2 * n);
  diag.head(n).setConstant(squeeze.b);
  diag.tail(n).setConstant(1.0 / squeeze.b);
  const Eigen::MatrixXd s = detail::cz_product(graph);
  Eigen::MatrixXd gamma = s * diag.asDiagonal() * s.transpose();
  gamma = 0.5 * (gamma + gamma.transpose()).eval();
  return GaussianState(std::move(gamma));
}

// Uniform photonic loss with transmissivity eta on every mode:
// Gamma -> eta Gamma + (1 - eta) I, d -> sqrt(eta) d.
inline GaussianState apply_loss(const GaussianState& state, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::invalid_argument("apply_loss: eta must lie in [0, 1]");
  Eigen::MatrixXd gamma =
      eta * state.gamma +
      (1.0 - eta) * Eigen::MatrixXd::Identity(state.gamma.rows(), state.gamma.cols());
  return GaussianState(std::move(gamma), std::sqrt(eta) * state.displacement);
}

}  // namespace entwidth
