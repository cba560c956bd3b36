#include "schwarz/ode.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace schwarz {

namespace {

namespace odeint = boost::numeric::odeint;

std::string at(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double checked_weight(const Weight& p, double x) {
  const double v = p(x);
  if (!std::isfinite(v)) throw NumericError("weight p is not finite at x = " + at(x) + " (step underflow)");
  return v;
}

// Drives an adaptive Dormand-Prince integration from a to b, calling
// on_step(t, state) after each accepted step; on_step returns false to stop.
template <std::size_t N, class System, class OnStep>
void drive(System&& sys, std::array<double, N>& state, double a, double b, const OdeOptions& opts, OnStep&& on_step) {
  using State = std::array<double, N>;
  auto stepper = odeint::make_controlled(opts.abs_tol, opts.rel_tol, odeint::runge_kutta_dopri5<State>());
  double t = a;
  double dt = std::min(opts.initial_step, b - a);
  while (b - t > 1e-15 * (1.0 + std::abs(b))) {
    dt = std::min({dt, opts.max_step, b - t});
    const auto result = stepper.try_step(sys, state, t, dt);
    if (result == odeint::success) {
      if (!on_step(t, state)) return;
    } else if (dt < opts.min_step) {
      throw NumericError("ODE step size underflow at x = " + at(t));
    }
  }
}

// u''(x_k) from the quintic Hermite interpolant of (u, u') at x_{k-1}, x_k, x_{k+1}.
double hermite_second_derivative(const OdeTrajectory& t, std::size_t k) {
  const double h = std::max(t.x[k] - t.x[k - 1], t.x[k + 1] - t.x[k]);
  // Unknowns c2..c5 of P(s) = u_k + du_k h s + c2 s^2 + ... + c5 s^5, s = (x - x_k)/h.
  double m[4][5];
  int row = 0;
  for (std::size_t j : {k - 1, k + 1}) {
    const double a = (t.x[j] - t.x[k]) / h;
    double pw = a * a;
    for (int c = 0; c < 4; ++c, pw *= a) m[row][c] = pw;
    m[row][4] = t.u[j] - t.u[k] - t.du[k] * h * a;
    ++row;
    pw = a;
    for (int c = 0; c < 4; ++c, pw *= a) m[row][c] = (c + 2) * pw;
    m[row][4] = (t.du[j] - t.du[k]) * h;
    ++row;
  }
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    std::swap(m[c], m[piv]);
    for (int r = c + 1; r < 4; ++r) {
      const double f = m[r][c] / m[c][c];
      for (int q = c; q < 5; ++q) m[r][q] -= f * m[c][q];
    }
  }
  double sol[4];
  for (int c = 3; c >= 0; --c) {
    double v = m[c][4];
    for (int q = c + 1; q < 4; ++q) v -= m[c][q] * sol[q];
    sol[c] = v / m[c][c];
  }
  return 2.0 * sol[0] / (h * h);
}

}  // namespace

double OdeTrajectory::residual_bound(const Weight& p) const {
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < x.size(); ++k) {
    worst = std::max(worst, std::abs(hermite_second_derivative(*this, k) + p(x[k]) * u[k]));
  }
  return worst;
}

OdeTrajectory integrate(const Weight& p, double u0, double du0, double a, double b, const OdeOptions& opts) {
  if (!(a > -1.0 && b < 1.0 && a <= b)) {
    throw InputError("integration interval [" + at(a) + ", " + at(b) + "] must lie in (-1, 1)");
  }
  OdeTrajectory traj;
  traj.x.push_back(a);
  traj.u.push_back(u0);
  traj.du.push_back(du0);
  std::array<double, 2> s{u0, du0};
  auto sys = [&](const std::array<double, 2>& y, std::array<double, 2>& dy, double x) {
    dy[0] = y[1];
    dy[1] = -checked_weight(p, x) * y[0];
  };
  drive(sys, s, a, b, opts, [&](double t, const std::array<double, 2>& y) {
    traj.max_step = std::max(traj.max_step, t - traj.x.back());
    traj.x.push_back(t);
    traj.u.push_back(y[0]);
    traj.du.push_back(y[1]);
    return true;
  });
  return traj;
}

std::pair<double, double> advance(const Weight& p, double u0, double du0, double a, double b, const OdeOptions& opts) {
  std::array<double, 2> s{u0, du0};
  auto sys = [&](const std::array<double, 2>& y, std::array<double, 2>& dy, double x) {
    dy[0] = y[1];
    dy[1] = -checked_weight(p, x) * y[0];
  };
  drive(sys, s, a, b, opts, [](double, const std::array<double, 2>&) { return true; });
  return {s[0], s[1]};
}

std::optional<double> first_zero(const Weight& p, double from, double cap, const OdeOptions& opts) {
  if (!(from > -1.0 && from < cap && cap < 1.0)) {
    throw InputError("first_zero needs -1 < from < cap < 1 (from = " + at(from) + ")");
  }
  std::array<double, 2> s{0.0, 1.0};
  double t_prev = from;
  std::array<double, 2> s_prev = s;
  std::optional<std::pair<double, double>> bracket;
  auto sys = [&](const std::array<double, 2>& y, std::array<double, 2>& dy, double x) {
    dy[0] = y[1];
    dy[1] = -checked_weight(p, x) * y[0];
  };
  drive(sys, s, from, cap, opts, [&](double t, const std::array<double, 2>& y) {
    const bool started = t_prev > from;
    if (y[0] == 0.0 || (started && (y[0] > 0.0) != (s_prev[0] > 0.0))) {
      bracket = {t_prev, t};
      return false;
    }
    t_prev = t;
    s_prev = y;
    return true;
  });
  if (!bracket) return std::nullopt;
  if (s[0] == 0.0) return bracket->second;

  // Bisect, restarting each trial integration from the last accepted node.
  double lo = bracket->first, hi = bracket->second;
  const bool positive_at_lo = s_prev[0] > 0.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const auto [u_mid, du_mid] = advance(p, s_prev[0], s_prev[1], bracket->first, mid, opts);
    (void)du_mid;
    if (u_mid == 0.0) return mid;
    if ((u_mid > 0.0) == positive_at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ZeroSpacing hyperbolic_zero_spacing(double delta) {
  if (!(delta > 0.0)) throw InputError("delta must be positive");
  const double spacing = std::numbers::pi / delta;
  return {spacing, std::tanh(spacing)};
}

Weight hille_weight(double delta) {
  return [k = 1.0 + delta * delta](double x) {
    const double w = 1.0 - x * x;
    return k / (w * w);
  };
}

ConvexityReport relative_convexity_check(const Weight& P, const Weight& Q, double b, std::size_t nodes) {
  if (!(b > 0.0 && b < 1.0)) throw InputError("relative convexity check needs 0 < b < 1");
  if (nodes < 3) throw InputError("relative convexity check needs at least 3 nodes");
  const std::size_t dense = 8 * nodes;
  for (std::size_t k = 0; k <= dense; ++k) {
    const double x = b * double(k) / double(dense);
    const double pv = P(x), qv = Q(x);
    if (qv > pv + 1e-14 * std::abs(pv)) {
      throw InputError("precondition Q <= P fails first at x = " + at(x) + " (Q = " + at(qv) + ", P = " + at(pv) + ")");
    }
  }

  // State: u, u', v, v', F.
  using S5 = std::array<double, 5>;
  auto sys = [&](const S5& y, S5& dy, double x) {
    dy[0] = y[1];
    dy[1] = -checked_weight(P, x) * y[0];
    dy[2] = y[3];
    dy[3] = -checked_weight(Q, x) * y[2];
    dy[4] = 1.0 / (y[2] * y[2]);
  };
  std::vector<double> xs, ws, ys, formula;
  S5 s{1.0, 0.0, 1.0, 0.0, 0.0};
  OdeOptions opts;
  for (std::size_t k = 0; k < nodes; ++k) {
    const double x = b * double(k) / double(nodes);
    if (k > 0) {
      const double x0 = b * double(k - 1) / double(nodes);
      drive(sys, s, x0, x, opts, [](double, const S5&) { return true; });
    }
    if (!(s[0] > 0.0) || !(s[2] > 0.0)) {
      throw InputError("positivity of u and v fails first at x = " + at(x));
    }
    const double w = s[0] / s[2];
    const double v2 = s[2] * s[2];
    xs.push_back(x);
    ws.push_back(w);
    ys.push_back(s[4]);
    formula.push_back((Q(x) - P(x)) * v2 * v2 * w);
  }

  ConvexityReport rep;
  rep.b = b;
  rep.samples = nodes;
  rep.max_w2_numeric = -INFINITY;
  rep.max_w2_formula = -INFINITY;
  rep.min_w = *std::min_element(ws.begin(), ws.end());
  for (std::size_t k = 1; k + 1 < nodes; ++k) {
    const double h1 = ys[k] - ys[k - 1], h2 = ys[k + 1] - ys[k];
    const double w2 = 2.0 * ((ws[k + 1] - ws[k]) / h2 - (ws[k] - ws[k - 1]) / h1) / (h1 + h2);
    rep.max_w2_numeric = std::max(rep.max_w2_numeric, w2);
    rep.max_w2_formula = std::max(rep.max_w2_formula, formula[k]);
    rep.max_discrepancy = std::max(rep.max_discrepancy, std::abs(w2 - formula[k]));
  }
  rep.concave = rep.max_w2_numeric <= 1e-8;
  return rep;
}

}  // namespace schwarz
