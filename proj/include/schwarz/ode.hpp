#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "schwarz/error.hpp"

namespace schwarz {

using Weight = std::function<double(double)>;

struct OdeOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  double initial_step = 1e-4;
  double max_step = 1e-2;
  double min_step = 1e-15;
};

// Accepted steps of u'' + p u = 0.
struct OdeTrajectory {
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> du;
  double max_step = 0.0;

  double residual_bound(const Weight& p) const;  // max |u'' + p u| from a quintic Hermite fit of (u, u')
};

// Dormand-Prince 5(4) on [a, b], which must lie in (-1, 1) with a <= b.
// Throws NumericError when p is not finite or the step size underflows.
OdeTrajectory integrate(const Weight& p, double u0, double du0, double a, double b, const OdeOptions& opts = {});

// State at b from the state at a, without recording the path.
std::pair<double, double> advance(const Weight& p, double u0, double du0, double a, double b,
                                  const OdeOptions& opts = {});

// Smallest zero > from of the solution with u(from) = 0, u'(from) = 1, located
// to 1e-12 by bisection; nullopt if none before `cap`.
std::optional<double> first_zero(const Weight& p, double from, double cap = 1.0 - 1e-6, const OdeOptions& opts = {});

struct ZeroSpacing {
  double hyperbolic = 0.0;  // pi / delta
  double euclidean = 0.0;   // c = tanh(pi / delta), first zero after 0
};

// Zero spacing for w'' + (1 + delta^2)(1 - x^2)^-2 w = 0. Throws InputError for delta <= 0.
ZeroSpacing hyperbolic_zero_spacing(double delta);

// Weight (1 + delta^2)(1 - x^2)^-2.
Weight hille_weight(double delta);

struct ConvexityReport {
  double b = 0.0;
  std::size_t samples = 0;
  double max_w2_numeric = 0.0;   // max over interior nodes of reconstructed w''
  double max_w2_formula = 0.0;   // max of (Q - P) v^4 w at the same nodes
  double max_discrepancy = 0.0;  // between the two
  double min_w = 0.0;
  bool concave = false;          // max_w2_numeric <= 1e-8
};

// Builds u'' + P u = 0, v'' + Q v = 0 from u = v = 1, u' = v' = 0 at 0,
// F = integral of v^-2, and checks concavity of w(y) = u/v at G(y) on [0, b).
// Throws InputError naming the first point where Q > P or u, v fail to stay positive.
ConvexityReport relative_convexity_check(const Weight& P, const Weight& Q, double b, std::size_t nodes = 400);

}  // namespace schwarz
