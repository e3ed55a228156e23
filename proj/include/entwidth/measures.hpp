#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "entwidth/analytic.hpp"
#include "entwidth/bipartition.hpp"
#include "entwidth/gaussian.hpp"
#include "entwidth/graph.hpp"

namespace entwidth {

inline double nats_to_bits(double nats) { return nats / std::log(2.0); }

// Von Neumann entropy across a cut of a pure Gaussian state, in nats.
// Rejects mixed inputs: the reduced entropy of a mixed state is not an
// entanglement measure.
inline double entropic_entanglement(const GaussianState& state, const Bipartition& cut) {
  if (cut.n_modes() != state.n_modes)
    throw std::invalid_argument("entropic_entanglement: mode count mismatch");
  if (!is_pure(state))
    throw std::invalid_argument(
        "entropic_entanglement: state is not pure; use log_negativity for mixed states");
  const GaussianState red = reduce(state, cut.side());
  double total = 0.0;
  for (double lambda : symplectic_eigenvalues(red.gamma)) total += ee_term(lambda);
  return total;
}

// Covariance matrix after partially transposing the modes in cut.side():
// the corresponding momentum rows and columns change sign.
inline Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& gamma,
                                         const Bipartition& cut) {
  const int n = static_cast<int>(gamma.rows()) / 2;
  if (cut.n_modes() != n)
    throw std::invalid_argument("partial_transpose: mode count mismatch");
  Eigen::MatrixXd pt = gamma;
  for (int q : cut.side()) {
    pt.row(n + q) *= -1.0;
    pt.col(n + q) *= -1.0;
  }
  return pt;
}

// Logarithmic negativity across a cut, in nats; valid for mixed states.
// Symplectic eigenvalues of the partially transposed covariance matrix below
// 1 each contribute -ln(lambda).
inline double log_negativity(const GaussianState& state, const Bipartition& cut) {
  if (cut.n_modes() != state.n_modes)
    throw std::invalid_argument("log_negativity: mode count mismatch");
  double total = 0.0;
  for (double lambda : symplectic_eigenvalues(partial_transpose(state.gamma, cut))) {
    if (!(lambda > 0.0))
      throw std::runtime_error("log_negativity: nonpositive partial-transpose eigenvalue");
    if (lambda < 1.0) total -= std::log(lambda);
  }
  return total;
}

// GF(2) rank of the adjacency submatrix with rows in cut.side() and columns in
// the complement; equals the qubit-cluster entanglement entropy in bits.
inline int qubit_cut_rank(const QubitGraph& graph, const Bipartition& cut) {
  if (cut.n_modes() != graph.n_vertices())
    throw std::invalid_argument("qubit_cut_rank: vertex count mismatch");
  const std::vector<int>& rows = cut.side();
  const std::vector<int> cols = cut.complement();
  const int words = (static_cast<int>(cols.size()) + 63) / 64;

  std::vector<std::uint64_t> packed(rows.size() * words, 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (graph.adjacent(rows[r], cols[c]))
        packed[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

  // Gaussian elimination over GF(2).
  int rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < static_cast<int>(rows.size()); ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (packed[r * words + word] & bit) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    for (int w = 0; w < words; ++w)
      std::swap(packed[pivot * words + w], packed[rank * words + w]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (packed[r * words + word] & bit))
        for (int w = 0; w < words; ++w) packed[r * words + w] ^= packed[rank * words + w];
    ++rank;
  }
  return rank;
}

// A cut evaluator for the width machinery. complement_symmetric enables the
// shared cache entry for a bipartition and its complement.
struct CutFunction {
  std::function<double(const Bipartition&)> eval;
  bool complement_symmetric = false;
};

// Entropic-entanglement cut of a pure state. Purity is verified once here, and
// the spectrum is taken on the smaller side of each cut.
inline CutFunction ee_cut(const GaussianState& state) {
  if (!is_pure(state))
    throw std::invalid_argument("ee_cut: state is not pure");
  return CutFunction{
      [state](const Bipartition& cut) {
        const std::vector<int> side =
            2 * cut.side_size() <= cut.n_modes() ? cut.side() : cut.complement();
        double total = 0.0;
        for (double lambda : symplectic_eigenvalues(reduce(state, side).gamma))
          total += ee_term(lambda);
        return total;
      },
      true};
}

inline CutFunction ln_cut(const GaussianState& state) {
  return CutFunction{
      [state](const Bipartition& cut) { return log_negativity(state, cut); },
      false};
}

// GF(2) cut rank as a real-valued cut (bits).
inline CutFunction rank_cut(const QubitGraph& graph) {
  return CutFunction{
      [graph](const Bipartition& cut) {
        return static_cast<double>(qubit_cut_rank(graph, cut));
      },
      true};
}

// Memoizing wrapper around a CutFunction. Thread-safe; insertions are
// idempotent so results do not depend on evaluation interleaving.
class CutCache {
 public:
  explicit CutCache(CutFunction fn) : fn_(std::move(fn)) {}

  double operator()(const Bipartition& cut) {
    const std::vector<int> key =
        fn_.complement_symmetric ? cut.canonical_side() : cut.side();
    {
      const std::lock_guard<std::mutex> lock(mutex_);
      const auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    const double value = fn_.eval(cut);
    const std::lock_guard<std::mutex> lock(mutex_);
    const auto [it, inserted] = memo_.emplace(key, value);
    if (inserted) ++evaluations_;
    return it->second;
  }

  std::uint64_t evaluations() const {
    const std::lock_guard<std::mutex> lock(mutex_);
    return evaluations_;
  }

  const CutFunction& function() const { return fn_; }

 private:
  CutFunction fn_;
  mutable std::mutex mutex_;
  std::map<std::vector<int>, double> memo_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace entwidth
