#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace entwidth {

// Reduced symplectic eigenvalue of a single CZ bond of strength b on vacuum.
inline double single_bond_lambda(double b) {
  if (!(b >= 0.0)) throw std::invalid_argument("single_bond_lambda: b must be >= 0");
  return std::sqrt(1.0 + b * b);
}

// One summand of the entropic entanglement,
// h(l) = ((l+1)/2) ln((l+1)/2) - ((l-1)/2) ln((l-1)/2), with h(1) = 0.
// Values in [1 - 1e-8, 1] are clamped to 1 so floating-point noise below 1
// cannot feed a negative argument to the logarithm.
inline double ee_term(double lambda) {
  if (!(lambda >= 1.0 - 1e-8))
    throw std::domain_error("ee_term: lambda below 1");
  if (lambda <= 1.0) return 0.0;
  const double p = 0.5 * (lambda + 1.0);
  const double m = 0.5 * (lambda - 1.0);
  return p * std::log(p) - m * std::log(m);
}

// High-squeezing form ln(lambda/2) + 1; upper-bounds ee_term for lambda > 1.
inline double ee_approx(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ee_approx: lambda must be positive");
  return std::log(0.5 * lambda) + 1.0;
}

// Star state, centre vs rest: equivalent single bond with strength sqrt(n-1) b.
inline double star_effective_b(int n, double b) {
  if (n < 2) throw std::invalid_argument("star_effective_b: need n >= 2");
  return std::sqrt(static_cast<double>(n - 1)) * b;
}

// Complete graph, r vs n-r: equivalent single bond with strength sqrt(r) sqrt(n-r) b.
inline double complete_effective_b(int r, int n, double b) {
  if (n < 2 || r < 1 || r > n - 1)
    throw std::invalid_argument("complete_effective_b: need 1 <= r <= n-1");
  return std::sqrt(static_cast<double>(r)) * std::sqrt(static_cast<double>(n - r)) * b;
}

// Symplectic spectrum of the odd/even bipartition of an n-mode wire with bond
// strength b: lambda_k = sqrt(1 + 2b^2 (1 + cos(2k pi/(n+1)))), k = 1..N0,
// where N0 = (n-1)/2 for odd n and n/2 for even n.
struct ZigzagSpectrum {
  int n;
  double b;
  std::vector<double> values;
};

inline ZigzagSpectrum zigzag_spectrum(int n, double b) {
  if (n < 2) throw std::invalid_argument("zigzag_spectrum: need n >= 2");
  const int n0 = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
  ZigzagSpectrum out{n, b, {}};
  out.values.reserve(n0);
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= n0; ++k)
    out.values.push_back(
        std::sqrt(1.0 + 2.0 * b * b * (1.0 + std::cos(2.0 * k * pi / (n + 1)))));
  return out;
}

inline double zigzag_ee_exact(int n, double b) {
  double total = 0.0;
  for (double lambda : zigzag_spectrum(n, b).values) total += ee_term(lambda);
  return total;
}

// Large-N0 integral forms, derived for odd wire lengths only. With the
// constant: N0 [1 - (3/2) ln 2 + ln sqrt(1 + 2b^2 + sqrt(1 + 4b^2))];
// without it just the N0 ln sqrt(...) term.
inline double zigzag_ee_approx(int n, double b, bool with_constant) {
  if (n < 2) throw std::invalid_argument("zigzag_ee_approx: need n >= 2");
  if (n % 2 == 0)
    throw std::invalid_argument("zigzag_ee_approx: defined for odd n only");
  const double n0 = 0.5 * (n - 1);
  const double core =
      std::log(std::sqrt(1.0 + 2.0 * b * b + std::sqrt(1.0 + 4.0 * b * b)));
  if (with_constant) return n0 * (1.0 - 1.5 * std::log(2.0) + core);
  return n0 * core;
}

// Width of the diagonal grid decomposition for large b: the central-diagonal
// cut behaves as a zigzag with bond strength sqrt(2) b and l-1 spectrum terms.
inline double diag_width_approx(int l, double b) {
  if (l < 2) throw std::invalid_argument("diag_width_approx: need l >= 2");
  return (l - 1) *
         std::log(std::sqrt(1.0 + 4.0 * b * b + std::sqrt(1.0 + 8.0 * b * b)));
}

// Width of the rectangular decomposition: l single bonds of strength sqrt(2) b
// across a row cut, each contributing ln sqrt(1+2b^2) + 1 - ln 2.
inline double rect_width_approx(int l, double b) {
  if (l < 2) throw std::invalid_argument("rect_width_approx: need l >= 2");
  return l * (std::log(std::sqrt(1.0 + 2.0 * b * b)) + 1.0 - std::log(2.0));
}

// Compact form of the above, dropping the additive constant per bond.
inline double rect_width_approx_compact(int l, double b) {
  if (l < 2) throw std::invalid_argument("rect_width_approx_compact: need l >= 2");
  return l * std::log(std::sqrt(1.0 + 2.0 * b * b));
}

// Best-case qubit conversion rate per grid row, the diagonal width slope
// divided by ln 2.
inline double conversion_rate(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("conversion_rate: b must be positive");
  return std::log(std::sqrt(1.0 + 4.0 * b * b + std::sqrt(1.0 + 8.0 * b * b))) /
         std::log(2.0);
}

// Squeezing parameter at which the conversion rate crosses 1, by bisection on
// [0.1, 2] to an interval width of 1e-10. The rate is strictly increasing.
inline double unit_rate_root() {
  double lo = 0.1, hi = 2.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (conversion_rate(mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Number of subcubic-tree decompositions of n modes: 1 for n = 2, 3 and
// (2n-5)!! for n >= 4. Exceeds 64 bits near n = 23, hence exact big integers.
inline boost::multiprecision::cpp_int count_decompositions(int n) {
  if (n < 2) throw std::invalid_argument("count_decompositions: need n >= 2");
  boost::multiprecision::cpp_int count = 1;
  for (int k = 3; k <= 2 * n - 5; k += 2) count *= k;
  return count;
}

}  // namespace entwidth
