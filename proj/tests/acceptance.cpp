// Acceptance suite: one test case per criterion, each printing a final
// [acceptance] PASS/FAIL line. Heavier cases print their measured runtime.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>

#include "test_util.hpp"

using namespace entwidth;
using Catch::Approx;

namespace {

class AcceptanceReporter : public Catch::EventListenerBase {
 public:
  using EventListenerBase::EventListenerBase;
  void testCaseEnded(const Catch::TestCaseStats& stats) override {
    std::printf("[acceptance] %s: %s\n", stats.testInfo->name.c_str(),
                stats.totals.assertions.allOk() ? "PASS" : "FAIL");
    std::fflush(stdout);
  }
};
CATCH_REGISTER_LISTENER(AcceptanceReporter)

double elapsed_seconds(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> default_b_grid() {
  std::vector<double> bs;
  for (int i = 0; i < 25; ++i) bs.push_back(0.25 * std::pow(32.0, i / 24.0));
  return bs;
}

struct LinearFit {
  double slope;
  double intercept;
  double r_squared;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (slope * x[i] + intercept);
    ss_res += r * r;
    const double d = y[i] - sy / n;
    ss_tot += d * d;
  }
  return LinearFit{slope, intercept, 1.0 - ss_res / ss_tot};
}

const int kThreads = default_thread_count();

}  // namespace

TEST_CASE("criterion 01: purity of lossless constructions") {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> bdist(0.3, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);  // up to 10 modes
    WeightedGraph g = testutil::random_graph(rng, n, 0.5, 0.3, 5.0);
    for (double v : symplectic_eigenvalues(canonical_cluster(g).gamma))
      REQUIRE(v == Approx(1.0).margin(1e-8));
    WeightedGraph unit = testutil::random_unit_graph(rng, n, 0.5);
    GaussianState phys = physical_cluster(unit, SqueezingParams::from_b(bdist(rng)));
    for (double v : symplectic_eigenvalues(phys.gamma))
      REQUIRE(v == Approx(1.0).margin(1e-8));
  }
  const double secs = elapsed_seconds(start);
  std::printf("  criterion 01 runtime: %.2f s (limit 10 s)\n", secs);
  REQUIRE(secs < 10.0);
}

TEST_CASE("criterion 02: single-bond symplectic eigenvalue law") {
  for (double b : {0.1, 0.54, 1.0, 2.0, 10.0}) {
    GaussianState red = reduce(canonical_cluster(path_graph(2, b)), {0});
    REQUIRE(symplectic_eigenvalues(red.gamma)[0] ==
            Approx(std::sqrt(1.0 + b * b)).margin(1e-10));
  }
}

TEST_CASE("criterion 03: zigzag closed form for N = 2..11") {
  bool odd_ok = true;
  for (int n = 2; n <= 11; ++n)
    for (double b : {0.5, 2.0, 8.0}) {
      GaussianState state = canonical_cluster(path_graph(n, b));
      std::vector<int> odd;
      for (int i = 1; i < n; i += 2) odd.push_back(i);
      const double numeric = entropic_entanglement(state, Bipartition(odd, n));
      const double closed = zigzag_ee_exact(n, b);
      const double diff = std::abs(numeric - closed);
      if (n % 2 == 1) {
        odd_ok = odd_ok && diff <= 1e-8;
        REQUIRE(diff <= 1e-8);
      } else if (diff > 1e-8) {
        // Reportable finding, not a failure, as long as the odd case holds.
        std::printf("  [finding] even N=%d b=%g: |numeric - closed| = %.3e\n", n, b,
                    diff);
      } else {
        REQUIRE(diff <= 1e-8);  // even N agrees as well
      }
    }
  REQUIRE(odd_ok);
}

TEST_CASE("criterion 04: star and complete-graph reductions") {
  for (double b : {0.5, 1.0, 2.0}) {
    for (int n = 2; n <= 8; ++n) {
      GaussianState star = canonical_cluster(star_graph(n, b));
      REQUIRE(entropic_entanglement(star, Bipartition({0}, n)) ==
              Approx(ee_term(single_bond_lambda(star_effective_b(n, b)))).margin(1e-8));
      GaussianState complete = canonical_cluster(complete_graph(n, b));
      for (int r = 1; r < n; ++r) {
        std::vector<int> side;
        for (int i = 0; i < r; ++i) side.push_back(i);
        REQUIRE(entropic_entanglement(complete, Bipartition(side, n)) ==
                Approx(ee_term(single_bond_lambda(complete_effective_b(r, n, b))))
                    .margin(1e-8));
      }
    }
  }
}

TEST_CASE("criterion 05: canonical and physical constructions agree") {
  std::mt19937 rng(2025);
  std::uniform_real_distribution<double> bdist(0.3, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);  // up to 8 modes
    WeightedGraph unit = testutil::random_unit_graph(rng, n, 0.5);
    const double b = bdist(rng);
    WeightedGraph scaled(n);
    for (const WeightedEdge& e : unit.edges()) scaled.add_edge(e.a, e.b, b);
    Bipartition cut = testutil::random_bipartition(rng, n);
    const double canon = entropic_entanglement(canonical_cluster(scaled), cut);
    const double phys =
        entropic_entanglement(physical_cluster(unit, SqueezingParams::from_b(b)), cut);
    REQUIRE(phys == Approx(canon).margin(1e-8));
  }
}

TEST_CASE("criterion 06: approximation quality") {
  const double exact21 = zigzag_ee_exact(21, 5.0);
  REQUIRE(std::abs(zigzag_ee_approx(21, 5.0, false) - exact21) / exact21 < 0.05);
  const double exact41 = zigzag_ee_exact(41, 10.0);
  REQUIRE(std::abs(zigzag_ee_approx(41, 10.0, false) - exact41) / exact41 < 0.01);
  for (double lambda = 1.0 + 1e-6; lambda < 1e4; lambda *= 1.7)
    REQUIRE(ee_approx(lambda) >= ee_term(lambda));
}

TEST_CASE("criterion 07: width DP equals brute force on random instances") {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> bdist(0.3, 5.0);
  int instances = 0;
  for (int trial = 0; trial < 27; ++trial) {
    for (bool use_ln : {false, true}) {
      const int n = 4 + static_cast<int>(rng() % 3);
      WeightedGraph unit = testutil::random_unit_graph(rng, n, 0.55);
      const double b = bdist(rng);
      WeightedGraph scaled(n);
      for (const WeightedEdge& e : unit.edges()) scaled.add_edge(e.a, e.b, b);

      CutFunction cut =
          use_ln ? ln_cut(apply_loss(physical_cluster(unit, SqueezingParams::from_b(b)),
                                     0.5 + 0.5 * bdist(rng) / 5.0))
                 : ee_cut(canonical_cluster(scaled));
      WidthResult dp = exact_width(n, cut);
      WidthResult brute = brute_force_width(n, cut);
      REQUIRE(std::abs(dp.width - brute.width) <= 1e-12);

      CutCache cache(cut);
      REQUIRE(width(dp.witness, cache) == Approx(dp.width).margin(1e-10));
      REQUIRE(width(brute.witness, cache) == Approx(brute.width).margin(1e-10));
      ++instances;
    }
  }
  REQUIRE(instances >= 50);
  const double secs = elapsed_seconds(start);
  std::printf("  criterion 07: %d instances in %.2f s (limit 60 s)\n", instances, secs);
  REQUIRE(secs < 60.0);
}

TEST_CASE("criterion 08: qubit rankwidths") {
  for (int n = 2; n <= 8; ++n)
    REQUIRE(exact_width(n, rank_cut(QubitGraph::from_graph(path_graph(n)))).width == 1.0);
  REQUIRE(exact_width(4, rank_cut(QubitGraph::from_graph(grid_graph(2)))).width == 1.0);

  const auto start = std::chrono::steady_clock::now();
  REQUIRE(exact_width(9, rank_cut(QubitGraph::from_graph(grid_graph(3)))).width == 2.0);
  const double secs = elapsed_seconds(start);
  std::printf("  criterion 08: 3x3 rankwidth in %.3f s (limit 1 s)\n", secs);
  REQUIRE(secs < 1.0);
}

TEST_CASE("criterion 09: EW converges to the diagonal width, later for 4x4") {
  const std::vector<double> bs = default_b_grid();

  auto find_bstar = [&](int l) {
    double bstar = -1.0;
    for (double b : bs) {
      GaussianState state = canonical_cluster(grid_graph(l, b));
      CutFunction cut = ee_cut(state);
      const double ew = exact_width(l * l, cut, kThreads).width;
      CutCache cache(cut);
      const double dw = width(diagonal_decomposition(l), cache);
      if (std::abs(ew - dw) <= 1e-6) {
        if (bstar < 0) bstar = b;
      } else {
        bstar = -1.0;
      }
    }
    return bstar;
  };

  const auto start3 = std::chrono::steady_clock::now();
  const double bstar3 = find_bstar(3);
  const double secs3 = elapsed_seconds(start3);
  std::printf("  criterion 09: 3x3 sweep %.2f s (limit 120 s), B* = %.4f\n", secs3,
              bstar3);
  REQUIRE(secs3 < 120.0);
  REQUIRE(bstar3 > 0.0);
  REQUIRE(bstar3 <= 8.0);

  const auto start4 = std::chrono::steady_clock::now();
  const double bstar4 = find_bstar(4);
  const double secs4 = elapsed_seconds(start4);
  std::printf("  criterion 09: 4x4 sweep %.2f s (limit 3600 s), B* = %.4f\n", secs4,
              bstar4);
  REQUIRE(secs4 < 3600.0);
  REQUIRE(bstar4 > 0.0);
  REQUIRE(bstar4 > bstar3);
}

TEST_CASE("criterion 10: diagonal/rectangular crossover at B = 2") {
  // Formula side: compact closed forms cross at l = 4.
  int formula_crossover = 0;
  for (int l = 2; l <= 15 && formula_crossover == 0; ++l)
    if (diag_width_approx(l, 2.0) > rect_width_approx_compact(l, 2.0))
      formula_crossover = l;
  REQUIRE(formula_crossover == 4);

  // The rectangular form that keeps its 1 - ln 2 constant crosses later.
  int full_form_crossover = 0;
  for (int l = 2; l <= 15 && full_form_crossover == 0; ++l)
    if (diag_width_approx(l, 2.0) > rect_width_approx(l, 2.0)) full_form_crossover = l;

  // Numeric side: decomposition widths of the actual grid states.
  int numeric_crossover = 0;
  for (int l = 2; l <= 15 && numeric_crossover == 0; ++l) {
    GaussianState state = canonical_cluster(grid_graph(l, 2.0));
    CutFunction cut = ee_cut(state);
    CutCache cache(cut);
    const double dw = width(diagonal_decomposition(l), cache, kThreads);
    const double rw = width(rectangular_decomposition(l), cache, kThreads);
    if (dw > rw) numeric_crossover = l;
  }
  std::printf(
      "  criterion 10: compact-form crossover l = %d, with-constant-form "
      "crossover l = %d, numeric crossover l = %d\n",
      formula_crossover, full_form_crossover, numeric_crossover);
  REQUIRE(numeric_crossover != 0);
  // Known to fail: the numeric crossover tracks the with-constant forms, not
  // the compact ones (the compact rectangular width drops 1 - ln 2 per row).
  REQUIRE(std::abs(numeric_crossover - formula_crossover) <= 1);
}

TEST_CASE("criterion 11: conversion-rate unit root") {
  const double root = unit_rate_root();
  REQUIRE(conversion_rate(root) == Approx(1.0).margin(1e-9));
  REQUIRE(root > 0.53);
  REQUIRE(root < 0.55);
}

TEST_CASE("criterion 12: loss behaviour of the 3x3 LNW") {
  for (double b : {2.0, 3.0, 4.0, 6.0, 8.0}) {
    GaussianState pure =
        physical_cluster(grid_graph(3, 1.0), SqueezingParams::from_b(b));
    const double lnw1 = exact_width(9, ln_cut(pure), kThreads).width;
    const double lnw09 =
        exact_width(9, ln_cut(apply_loss(pure, 0.9)), kThreads).width;
    REQUIRE(lnw09 < lnw1);
    const double ratio = lnw09 / lnw1;
    std::printf("  criterion 12: b=%g LNW(0.9)/LNW(1) = %.4f\n", b, ratio);
    REQUIRE(ratio >= 0.25);
    REQUIRE(ratio <= 0.75);
  }

  // Extreme loss at strong squeezing: the named decompositions stop being
  // optimal.
  GaussianState pure = physical_cluster(grid_graph(3, 1.0), SqueezingParams::from_b(8.0));
  GaussianState lossy = apply_loss(pure, 0.25);
  CutFunction cut = ln_cut(lossy);
  const double lnw = exact_width(9, cut, kThreads).width;
  CutCache cache(cut);
  const double dw = width(diagonal_decomposition(3), cache);
  const double rw = width(rectangular_decomposition(3), cache);
  std::printf("  criterion 12: eta=0.25 b=8: LNW=%.6f diag=%.6f rect=%.6f\n", lnw, dw,
              rw);
  REQUIRE((dw > lnw + 1e-9 || rw > lnw + 1e-9));
}

TEST_CASE("criterion 13: LN widths grow linearly in grid size") {
  const auto start = std::chrono::steady_clock::now();
  const double b = 2.0;
  std::vector<double> ls;
  for (int l = 3; l <= 15; ++l) ls.push_back(l);

  double diag_slope_lossless = 0.0, rect_slope_lossless = 0.0;
  for (double eta : {1.0, 0.9, 0.5}) {
    std::vector<double> diag_w, rect_w;
    for (int l = 3; l <= 15; ++l) {
      GaussianState state = apply_loss(
          physical_cluster(grid_graph(l, 1.0), SqueezingParams::from_b(b)), eta);
      CutFunction cut = ln_cut(state);
      CutCache cache(cut);
      diag_w.push_back(width(diagonal_decomposition(l), cache, kThreads));
      rect_w.push_back(width(rectangular_decomposition(l), cache, kThreads));
    }
    const LinearFit diag_fit = fit_line(ls, diag_w);
    const LinearFit rect_fit = fit_line(ls, rect_w);
    std::printf(
        "  criterion 13: eta=%g diag slope=%.4f R2=%.6f | rect slope=%.4f R2=%.6f\n",
        eta, diag_fit.slope, diag_fit.r_squared, rect_fit.slope, rect_fit.r_squared);
    REQUIRE(diag_fit.r_squared > 0.999);
    REQUIRE(rect_fit.r_squared > 0.999);
    if (eta == 1.0) {
      diag_slope_lossless = diag_fit.slope;
      rect_slope_lossless = rect_fit.slope;
    }
  }
  REQUIRE(diag_slope_lossless > rect_slope_lossless);
  std::printf("  criterion 13 runtime: %.1f s\n", elapsed_seconds(start));
}

TEST_CASE("criterion 14: decomposition counting matches enumeration") {
  const std::size_t expected[] = {3, 15, 105, 945};
  for (int n = 4; n <= 7; ++n) {
    REQUIRE(all_decompositions(n).size() == expected[n - 4]);
    REQUIRE(count_decompositions(n) == expected[n - 4]);
  }
}
