#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entwidth {

// Williamson normal-mode values, sorted descending, one per mode.
using SymplecticSpectrum = std::vector<double>;

// Block matrix [[0, I], [-I, 0]] in X-major ordering (all positions, then all
// momenta), so that [O_j, O_k] = i Sigma_jk.
inline Eigen::MatrixXd symplectic_form(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
  const int n = n_modes;
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  sigma.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  sigma.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return sigma;
}

// Sigma * m without forming Sigma: swap the position/momentum row blocks.
inline Eigen::MatrixXd sigma_times(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows() / 2;
  Eigen::MatrixXd out(m.rows(), m.cols());
  out.topRows(n) = m.bottomRows(n);
  out.bottomRows(n) = -m.topRows(n);
  return out;
}

namespace detail {

inline void require_even_square(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() == 0 || m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": expected a nonempty 2Nx2N matrix");
  if (!m.allFinite())
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

inline void require_symmetric(const Eigen::MatrixXd& m, const char* who) {
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-12 * scale))
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
}

}  // namespace detail

// A linear phase-space transformation S with S^t Sigma S = Sigma.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Eigen::MatrixXd s) : s_(std::move(s)) {
    detail::require_even_square(s_, "SymplecticMatrix");
    const Eigen::MatrixXd sigma = symplectic_form(n_modes());
    const double scale = 1.0 + std::pow(s_.cwiseAbs().maxCoeff(), 2);
    const double err = (s_.transpose() * sigma * s_ - sigma).cwiseAbs().maxCoeff();
    if (!(err <= 1e-10 * scale))
      throw std::invalid_argument("SymplecticMatrix: S^t Sigma S != Sigma");
  }

  const Eigen::MatrixXd& matrix() const { return s_; }
  int n_modes() const { return static_cast<int>(s_.rows()) / 2; }

 private:
  Eigen::MatrixXd s_;
};

// Covariance matrix (vacuum-normalized, so vacuum -> identity) plus
// displacement vector for N qumodes, X-major ordering. The displacement is
// carried along but ignored by every entanglement computation.
struct GaussianState {
  int n_modes;
  Eigen::MatrixXd gamma;
  Eigen::VectorXd displacement;

  GaussianState(Eigen::MatrixXd gamma_in, Eigen::VectorXd displacement_in)
      : n_modes(static_cast<int>(gamma_in.rows()) / 2),
        gamma(std::move(gamma_in)),
        displacement(std::move(displacement_in)) {
    detail::require_even_square(gamma, "GaussianState");
    detail::require_symmetric(gamma, "GaussianState");
    if (displacement.size() != gamma.rows())
      throw std::invalid_argument("GaussianState: displacement size mismatch");
    if (!displacement.allFinite())
      throw std::invalid_argument("GaussianState: non-finite displacement");
  }

  explicit GaussianState(const Eigen::MatrixXd& gamma_in)
      : GaussianState(gamma_in, Eigen::VectorXd::Zero(gamma_in.rows())) {}
};

inline GaussianState vacuum_state(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("vacuum_state: n_modes must be >= 1");
  return GaussianState(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

inline GaussianState apply_symplectic(const GaussianState& state,
                                      const SymplecticMatrix& s) {
  if (s.n_modes() != state.n_modes)
    throw std::invalid_argument("apply_symplectic: dimension mismatch");
  const Eigen::MatrixXd& m = s.matrix();
  Eigen::MatrixXd gamma = m * state.gamma * m.transpose();
  gamma = 0.5 * (gamma + gamma.transpose()).eval();
  return GaussianState(std::move(gamma), m * state.displacement);
}

namespace detail {

// Fast Williamson path for positive-definite input: with gamma = L L^t the
// matrix K = L^t Sigma L is antisymmetric and similar to Sigma gamma, so the
// eigenvalues of K K^t = -K^2 are the squared symplectic eigenvalues, each
// appearing exactly twice.
inline std::optional<SymplecticSpectrum> sympl_eig_positive_definite(
    const Eigen::MatrixXd& gamma) {
  const Eigen::LLT<Eigen::MatrixXd> llt(gamma);
  if (llt.info() != Eigen::Success) return std::nullopt;
  const Eigen::MatrixXd l = llt.matrixL();
  const Eigen::MatrixXd k = l.transpose() * sigma_times(l);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k * k.transpose(),
                                                          Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXd& mu = es.eigenvalues();  // ascending, lambda^2 in pairs
  const int n = static_cast<int>(gamma.rows()) / 2;
  const double scale = std::max(1.0, mu(2 * n - 1));
  SymplecticSpectrum values(n);
  for (int i = 0; i < n; ++i) {
    const double lo = std::max(mu(2 * i), 0.0);
    const double hi = std::max(mu(2 * i + 1), 0.0);
    if (hi - lo > 1e-8 * scale) return std::nullopt;  // fall back to the general path
    values[n - 1 - i] = std::sqrt(0.5 * (lo + hi));
  }
  return values;
}

// General path: eigenvalues of Sigma gamma come in +/- i lambda pairs. Real
// parts beyond tolerance or unmatchable pairs signal corrupted input.
inline SymplecticSpectrum sympl_eig_general(const Eigen::MatrixXd& gamma) {
  const Eigen::EigenSolver<Eigen::MatrixXd> es(sigma_times(gamma), false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("symplectic_eigenvalues: eigensolver failed");
  const Eigen::VectorXcd& ev = es.eigenvalues();

  double scale = 1.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) scale = std::max(scale, std::abs(ev(i)));
  const double tol = 1e-8 * scale;

  std::vector<double> pos, neg;
  int zeros = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i).real()) > tol)
      throw std::runtime_error(
          "symplectic_eigenvalues: eigenvalue of Sigma*Gamma has a nonvanishing "
          "real part (input not a valid symmetric covariance matrix?)");
    const double im = ev(i).imag();
    if (im > tol)
      pos.push_back(im);
    else if (im < -tol)
      neg.push_back(-im);
    else
      ++zeros;
  }
  if (pos.size() != neg.size() || zeros % 2 != 0)
    throw std::runtime_error("symplectic_eigenvalues: +/- pair matching failed");

  std::sort(pos.begin(), pos.end(), std::greater<double>());
  std::sort(neg.begin(), neg.end(), std::greater<double>());
  SymplecticSpectrum values;
  values.reserve(pos.size() + zeros / 2);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (std::abs(pos[i] - neg[i]) > tol)
      throw std::runtime_error("symplectic_eigenvalues: +/- pair matching failed");
    values.push_back(0.5 * (pos[i] + neg[i]));
  }
  for (int i = 0; i < zeros / 2; ++i) values.push_back(0.0);
  std::sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

}  // namespace detail

inline SymplecticSpectrum symplectic_eigenvalues(const Eigen::MatrixXd& gamma) {
  detail::require_even_square(gamma, "symplectic_eigenvalues");
  detail::require_symmetric(gamma, "symplectic_eigenvalues");
  if (auto fast = detail::sympl_eig_positive_definite(gamma)) return *fast;
  return detail::sympl_eig_general(gamma);
}

inline SymplecticSpectrum symplectic_eigenvalues(const GaussianState& state) {
  return symplectic_eigenvalues(state.gamma);
}

// Keeps the listed modes (sorted ascending, preserving X-major ordering) and
// deletes the X and P rows/columns of everything else.
inline GaussianState reduce(const GaussianState& state, std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("reduce: keep set is empty");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("reduce: duplicate mode index");
  if (keep.front() < 0 || keep.back() >= state.n_modes)
    throw std::invalid_argument("reduce: mode index out of range");

  const int n = state.n_modes;
  const int k = static_cast<int>(keep.size());
  std::vector<int> idx(2 * k);
  for (int i = 0; i < k; ++i) {
    idx[i] = keep[i];
    idx[k + i] = n + keep[i];
  }
  return GaussianState(state.gamma(idx, idx), state.displacement(idx));
}

inline bool is_physical(const GaussianState& state) {
  const SymplecticSpectrum values = symplectic_eigenvalues(state.gamma);
  return values.back() >= 1.0 - 1e-8;
}

// Pure iff every symplectic eigenvalue equals 1 within tol.
inline bool is_pure(const GaussianState& state, double tol = 1e-6) {
  for (double v : symplectic_eigenvalues(state.gamma))
    if (std::abs(v - 1.0) > tol) return false;
  return true;
}

}  // namespace entwidth
