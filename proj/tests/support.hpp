#pragma once

// Oracles and helpers shared by the unit tests. Nothing here calls the jet
// machinery, so it can check it.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace testing {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Derivatives 1..3 of an analytic function from values only, by the
// trapezoid rule on a small circle (Cauchy's integral formula). Converges
// geometrically in n; rounding error grows like 1/rho^k.
inline std::array<cplx, 4> cauchy_derivatives(const std::function<cplx(cplx)>& f, cplx z, double rho = 0.02,
                                              int n = 64) {
  std::array<cplx, 4> d{f(z), 0.0, 0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const cplx u = std::polar(1.0, 2.0 * kPi * j / n);
    const cplx v = f(z + rho * u);
    d[1] += v / u;
    d[2] += v / (u * u);
    d[3] += v / (u * u * u);
  }
  d[1] /= n * rho;
  d[2] *= 2.0 / (n * rho * rho);
  d[3] *= 6.0 / (n * rho * rho * rho);
  return d;
}

inline double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

inline std::vector<cplx> disk_points(std::size_t n, double rmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(std::polar(rmax * std::sqrt(u(rng)), 2.0 * kPi * u(rng)));
  return out;
}

// Hille map ((1+z)/(1-z))^(i delta) straight from std::complex.
inline cplx hille_value(double delta, cplx z) { return std::exp(cplx(0.0, delta) * std::log((1.0 + z) / (1.0 - z))); }

// Roots of hille(z) = 1 in |z| < r are 0 and +-tanh(n pi / delta), n >= 1.
inline int hille_root_count(double delta, double r) {
  int count = 1;
  for (int n = 1; std::tanh(n * kPi / delta) < r; ++n) count += 2;
  return count;
}

}  // namespace testing
