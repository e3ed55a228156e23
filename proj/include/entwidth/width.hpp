#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "entwidth/analytic.hpp"
#include "entwidth/bipartition.hpp"
#include "entwidth/decomposition.hpp"
#include "entwidth/measures.hpp"
#include "entwidth/parallel.hpp"

namespace entwidth {

// Raised when a request exceeds a configured size cap rather than failing on
// invalid input.
struct resource_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WidthResult {
  double width;
  Decomposition witness;
  std::uint64_t cut_evaluations;
};

namespace detail {

// Binary-tree reconstruction from the DP back-pointers; the root is removed
// and its two incident edges merged into one.
struct WitnessBuilder {
  const std::vector<std::uint32_t>& split;
  std::vector<std::array<int, 2>> edges;
  std::vector<int> leaf_mode;

  int build(std::uint32_t mask) {
    if (std::popcount(mask) == 1) {
      leaf_mode.push_back(std::countr_zero(mask));
      return static_cast<int>(leaf_mode.size()) - 1;
    }
    const std::uint32_t y = split[mask];
    const int a = build(y);
    const int b = build(mask ^ y);
    leaf_mode.push_back(-1);
    const int v = static_cast<int>(leaf_mode.size()) - 1;
    edges.push_back({v, a});
    edges.push_back({v, b});
    return v;
  }
};

}  // namespace detail

// Exact entanglement width by subset dynamic programming:
//   w(X) = cut(X)                                      for |X| = 1,
//   w(X) = min over nonempty proper Y of X of
//          max{cut(Y), cut(X\Y), w(Y), w(X\Y)}         for |X| >= 2,
// where cut(S) is always evaluated against the global complement. The
// splitting Y is restricted to contain the lowest set bit of X (the two
// halves enter symmetrically), and within each cardinality layer the subsets
// are independent, which is what the optional parallelism exploits. Cut
// values use exact floating-point comparison; no epsilon snapping.
inline WidthResult exact_width(int n_modes, const CutFunction& cut, int threads = 1,
                               int cap = 20) {
  constexpr int kHardCap = 22;
  if (n_modes < 2) throw std::invalid_argument("exact_width: need n_modes >= 2");
  if (cap > kHardCap) cap = kHardCap;
  if (n_modes > cap)
    throw resource_cap_error("exact_width: n_modes exceeds the configured cap");

  const std::uint32_t full = (std::uint32_t{1} << n_modes) - 1;
  std::vector<double> cutv(full + 1, 0.0);

  // Cut table over all proper nonempty subsets; complement-symmetric cuts are
  // evaluated once per pair and mirrored.
  parallel_for(full - 1, threads, [&](std::size_t i) {
    const auto mask = static_cast<std::uint32_t>(i + 1);
    const std::uint32_t cmask = full ^ mask;
    if (cut.complement_symmetric && mask > cmask) return;
    const double value = cut.eval(Bipartition::from_mask(mask, n_modes));
    cutv[mask] = value;
    if (cut.complement_symmetric) cutv[cmask] = value;
  });
  const std::uint64_t evaluations =
      cut.complement_symmetric ? (full - 1) / 2 : full - 1;

  std::vector<std::vector<std::uint32_t>> layers(n_modes + 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    layers[std::popcount(mask)].push_back(mask);

  std::vector<double> w(full + 1, 0.0);
  std::vector<std::uint32_t> split(full + 1, 0);
  for (const std::uint32_t mask : layers[1]) w[mask] = cutv[mask];

  for (int size = 2; size <= n_modes; ++size) {
    const std::vector<std::uint32_t>& layer = layers[size];
    parallel_for(layer.size(), threads, [&](std::size_t i) {
      const std::uint32_t x = layer[i];
      const std::uint32_t low = x & (~x + 1);
      const std::uint32_t rest = x ^ low;
      double best = std::numeric_limits<double>::infinity();
      std::uint32_t best_y = 0;
      for (std::uint32_t s = (rest - 1) & rest;; s = (s - 1) & rest) {
        const std::uint32_t y = s | low;
        const std::uint32_t z = x ^ y;
        double value = std::max(cutv[y], cutv[z]);
        value = std::max(value, std::max(w[y], w[z]));
        if (value < best) {
          best = value;
          best_y = y;
        }
        if (s == 0) break;
      }
      w[x] = best;
      split[x] = best_y;
    });
  }

  detail::WitnessBuilder builder{split, {}, {}};
  const std::uint32_t root_y = split[full];
  const int a = builder.build(root_y);
  const int b = builder.build(full ^ root_y);
  builder.edges.push_back({a, b});
  Decomposition witness(n_modes, std::move(builder.edges), std::move(builder.leaf_mode));

  // The witness tree must reproduce the DP value exactly.
  double check = 0.0;
  for (const Bipartition& cut_b : witness.edge_bipartitions())
    check = std::max(check, cutv[cut_b.mask()]);
  if (std::abs(check - w[full]) > 1e-10)
    throw std::logic_error("exact_width: witness width does not match DP value");

  return WidthResult{w[full], std::move(witness), evaluations};
}

namespace detail {

struct RawTree {
  std::vector<std::array<int, 2>> edges;
  std::vector<int> leaf_mode;
};

}  // namespace detail

// Every subcubic-tree decomposition of n modes, generated inductively: each
// decomposition of n-1 modes and each of its edges yields one decomposition
// of n modes by splitting the edge and hanging the new leaf off the split
// point. The generated count must equal count_decompositions(n).
inline std::vector<Decomposition> all_decompositions(int n_modes) {
  if (n_modes < 2) throw std::invalid_argument("all_decompositions: need n >= 2");
  if (n_modes > 9)
    throw resource_cap_error("all_decompositions: refusing n > 9 (double-factorial growth)");

  std::vector<detail::RawTree> current{detail::RawTree{{{0, 1}}, {0, 1}}};
  for (int mode = 2; mode < n_modes; ++mode) {
    std::vector<detail::RawTree> next;
    next.reserve(current.size() * (2 * static_cast<std::size_t>(mode) - 3));
    for (const detail::RawTree& t : current)
      for (std::size_t e = 0; e < t.edges.size(); ++e) {
        detail::RawTree s = t;
        const int b = s.edges[e][1];
        s.leaf_mode.push_back(-1);
        const int mid = static_cast<int>(s.leaf_mode.size()) - 1;
        s.leaf_mode.push_back(mode);
        const int leaf = static_cast<int>(s.leaf_mode.size()) - 1;
        s.edges[e][1] = mid;
        s.edges.push_back({mid, b});
        s.edges.push_back({mid, leaf});
        next.push_back(std::move(s));
      }
    current = std::move(next);
  }

  if (count_decompositions(n_modes) != current.size())
    throw std::logic_error("all_decompositions: enumeration count mismatch");

  std::vector<Decomposition> out;
  out.reserve(current.size());
  for (detail::RawTree& t : current)
    out.emplace_back(n_modes, std::move(t.edges), std::move(t.leaf_mode));
  return out;
}

// Minimum width over every decomposition, by exhaustive enumeration. The
// first decomposition attaining the minimum (in generation order) is the
// witness. Cut values are shared across trees through one cache.
inline WidthResult brute_force_width(int n_modes, const CutFunction& cut) {
  if (n_modes < 2) throw std::invalid_argument("brute_force_width: need n >= 2");
  if (n_modes > 7)
    throw resource_cap_error("brute_force_width: n > 7 (945 trees at n = 7 is the limit)");

  CutCache cache(cut);
  std::vector<Decomposition> trees = all_decompositions(n_modes);
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    double tree_width = 0.0;
    for (const Bipartition& cut_b : trees[i].edge_bipartitions())
      tree_width = std::max(tree_width, cache(cut_b));
    if (tree_width < best) {
      best = tree_width;
      best_index = i;
    }
  }
  return WidthResult{best, std::move(trees[best_index]), cache.evaluations()};
}

}  // namespace entwidth
