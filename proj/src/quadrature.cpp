#include "schwarz/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace schwarz {

namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi;  // parameter range in [0, 1]
  cplx value;
  double error;
  double abs_integral;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<cplx(cplx)>& f, cplx a, cplx dir, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const cplx fc = f(a + center * dir);
  cplx kron = kWgk[7] * fc;
  cplx gauss = kWg[3] * fc;
  double absk = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx f1 = f(a + (center - dx) * dir);
    const cplx f2 = f(a + (center + dx) * dir);
    kron += kWgk[j] * (f1 + f2);
    absk += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const cplx scale = half * dir;
  return {lo, hi, kron * scale, std::abs((kron - gauss) * scale), absk * std::abs(scale)};
}

}  // namespace

QuadratureResult integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b,
                                   const QuadratureOptions& opts) {
  QuadratureResult out;
  const cplx dir = b - a;
  if (dir == cplx(0.0)) return out;

  std::priority_queue<Panel> panels;
  panels.push(gk15(f, a, dir, 0.0, 1.0));
  out.evaluations = 15;
  cplx total = panels.top().value;
  double total_err = panels.top().error;
  double abs_total = panels.top().abs_integral;

  while (true) {
    const double tol = std::max(opts.abs_tol, opts.rel_tol * abs_total);
    if (total_err <= tol) break;
    if (static_cast<int>(panels.size()) >= opts.max_intervals) {
      throw NumericError("quadrature did not converge on segment " + format_complex(a) + " -> " +
                         format_complex(b) + " (error estimate " + std::to_string(total_err) + ")");
    }
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi) || (worst.hi - worst.lo) < 1e-14) {
      throw NumericError("quadrature subdivision underflow near " + format_complex(a + mid * dir));
    }
    const Panel left = gk15(f, a, dir, worst.lo, mid);
    const Panel right = gk15(f, a, dir, mid, worst.hi);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    abs_total += left.abs_integral + right.abs_integral - worst.abs_integral;
    panels.push(left);
    panels.push(right);
  }
  // Recompute the sum from the panels to drop accumulated update error.
  cplx sum = 0.0;
  double err = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  out.value = sum;
  out.error = err;
  return out;
}

}  // namespace schwarz
