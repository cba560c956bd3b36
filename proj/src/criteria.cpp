#include "schwarz/criteria.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "schwarz/hyperbolic.hpp"
#include "schwarz/surface.hpp"

namespace schwarz {

namespace {

constexpr double kBoundaryBand = 1e-3;
constexpr double kMaxExcludedFraction = 0.01;
constexpr double kEqualValueTol = 1e-8;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

CriterionVerdict classify(const std::function<double(cplx)>& lhs, const NehariFunction& p, int depth,
                          std::optional<double> C, const SupOptions& opts) {
  auto against_p = [&](cplx z) {
    const double r = std::abs(z);
    const double w = 1.0 - r * r;
    return lhs(z) * w * w / p.weighted(r);
  };
  const SupResult main = disk_sup(against_p, depth, opts);

  CriterionVerdict v;
  v.minimal_C = main.value;
  v.sup_point = main.point;
  v.grid_depth = depth;
  v.samples = main.samples;
  v.excluded = main.excluded;
  v.exclusions = main.exclusions;
  v.mu_used = p.mu();
  v.weight = p.name();
  if (p.kind() == NehariKind::Classical) {
    v.classical_C = main.value;
  } else {
    auto against_classical = [&](cplx z) {
      const double w = 1.0 - std::norm(z);
      return lhs(z) * w * w;
    };
    v.classical_C = disk_sup(against_classical, depth, opts).value;
  }
  if (C) {
    v.supplied_C = *C;
    v.bound_holds = v.minimal_C <= *C;
  }

  std::ostringstream details;
  if (main.excluded_fraction() > kMaxExcludedFraction) {
    v.classification = Classification::Inconclusive;
    details << main.excluded << " of " << main.samples << " grid points could not be evaluated";
    v.details = details.str();
    return v;
  }

  const double m = v.minimal_C;
  if (p.kind() == NehariKind::Constant && m > 0.0) {
    const double absolute = m * std::numbers::pi * std::numbers::pi / 4.0;
    v.separation_euclidean = std::sqrt(2.0 / absolute) * std::numbers::pi;
  }
  if (std::abs(m - 2.0) <= kBoundaryBand) {
    v.classification = Classification::Inconclusive;
    details << "sampled constant " << fmt(m) << " lies within " << kBoundaryBand << " of the sharp threshold 2";
  } else if (m < 2.0) {
    v.classification = Classification::Univalent;
    v.finite_valence = true;
    details << "|Sf| <= 2p on all sampled points (sampled constant " << fmt(m) << ")";
  } else {
    const double c1 = v.classical_C;
    if (c1 > 2.0 + kBoundaryBand) {
      v.delta = std::sqrt(c1 / 2.0 - 1.0);
      v.separation_hyperbolic = std::numbers::pi / *v.delta;
    } else if (c1 < 2.0 - kBoundaryBand) {
      v.separation_hyperbolic = std::numeric_limits<double>::infinity();
    }
    v.finite_valence = p.mu() == 0.0 || m * p.mu() < 2.0;
    v.classification = v.finite_valence ? Classification::FiniteValence : Classification::UniformLocal;
    details << "sampled constant " << fmt(m) << " > 2 with mu = " << fmt(p.mu()) << "; classical-weight constant "
            << fmt(c1);
    if (v.delta) details << " gives delta = " << fmt(*v.delta) << ", separation pi/delta = " << fmt(*v.separation_hyperbolic);
    details << (v.finite_valence ? "; C*mu < 2, valence finite" : "; C*mu >= 2, valence may be infinite");
  }
  if (C && !*v.bound_holds) details << "; supplied C = " << fmt(*C) << " is exceeded at a sampled point";
  if (!main.converged) details << "; grid sup not yet stable over the last three levels";
  v.details = details.str();
  return v;
}

}  // namespace

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Univalent: return "Univalent";
    case Classification::UniformLocal: return "UniformLocal";
    case Classification::FiniteValence: return "FiniteValence";
    case Classification::Inconclusive: return "Inconclusive";
  }
  return "?";
}

CriterionVerdict check_bound(const AnalyticMap& f, const NehariFunction& p, int grid_depth, std::optional<double> C,
                             const SupOptions& opts) {
  auto lhs = [&f](cplx z) { return std::abs(schwarzian_analytic(f.eval_derivatives(z))); };
  return classify(lhs, p, grid_depth, C, opts);
}

CriterionVerdict check_bound(const HarmonicMap& f, const NehariFunction& p, int grid_depth, std::optional<double> C,
                             const SupOptions& opts) {
  auto lhs = [&f](cplx z) {
    const HarmonicMap::Local loc = f.local(z);
    return std::abs(schwarzian_harmonic(loc)) + curvature_term(loc);
  };
  return classify(lhs, p, grid_depth, C, opts);
}

bool classify_finite_valence(double C, const NehariFunction& p) {
  if (!(C > 0.0)) throw InputError("C must be positive");
  return C * p.mu() < 2.0;
}

ValenceCount count_valence(const AnalyticMap& f, cplx w, double r, const ValenceOptions& opts) {
  if (!(r > 0.0 && r < f.domain_radius())) throw InputError("contour radius must lie in (0, domain radius)");
  if (opts.initial_points < 4) throw InputError("contour needs at least 4 points");
  auto term = [&](double theta) {
    const cplx z = std::polar(r, theta);
    Jet3 j;
    try {
      j = f.eval_jet(z);
    } catch (const DomainError& e) {
      throw NumericError(std::string("contour |z| = ") + fmt(r) + " hits a singularity: " + e.what());
    }
    const cplx diff = j.f0 - w;
    if (diff == cplx(0.0)) {
      throw NumericError("contour |z| = " + fmt(r) + " passes through a solution at " + format_complex(z) +
                         "; retry with a different r");
    }
    return j.f1 * z / diff;
  };
  auto residual_of = [](cplx I) { return std::hypot(I.real() - std::round(I.real()), I.imag()); };

  const double two_pi = 2.0 * std::numbers::pi;
  std::size_t n = opts.initial_points;
  cplx sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) sum += term(two_pi * double(k) / double(n));
  cplx integral = sum / double(n);
  while (true) {
    cplx odd = 0.0;
    for (std::size_t k = 0; k < n; ++k) odd += term(two_pi * (double(k) + 0.5) / double(n));
    sum += odd;
    n *= 2;
    const cplx refined = sum / double(n);
    const bool stable = std::abs(refined - integral) < opts.tolerance;
    integral = refined;
    if (stable && residual_of(integral) < opts.tolerance) break;
    if (n >= opts.max_points) break;
  }
  ValenceCount out;
  out.w = w;
  out.r = r;
  out.count = static_cast<int>(std::lround(integral.real()));
  out.residual = residual_of(integral);
  out.contour_points = n;
  if (out.residual >= 0.25) {
    throw NumericError("argument-principle integral " + format_complex(integral) + " is not near an integer on |z| = " +
                       fmt(r) + "; retry with a different r");
  }
  return out;
}

double separation_audit(const AnalyticMap& f, const std::vector<PointPair>& pairs) {
  if (pairs.empty()) throw InputError("separation audit needs at least one pair");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : pairs) {
    if (a == b) throw InputError("pair points are not distinct: " + format_complex(a));
    const cplx fa = f.value(a), fb = f.value(b);
    if (std::abs(fa - fb) > kEqualValueTol) {
      throw InputError("pair " + format_complex(a) + ", " + format_complex(b) + " is not equal-valued (|f(a)-f(b)| = " +
                       fmt(std::abs(fa - fb)) + ")");
    }
    best = std::min(best, hyp_distance(a, b));
  }
  return best;
}

double separation_audit(const HarmonicMap& f, const std::vector<PointPair>& pairs) {
  if (pairs.empty()) throw InputError("separation audit needs at least one pair");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : pairs) {
    if (a == b) throw InputError("pair points are not distinct: " + format_complex(a));
    const LiftSample la = lift(f, a), lb = lift(f, b);
    const double gap = std::max({std::abs(la.U - lb.U), std::abs(la.V - lb.V), std::abs(la.W - lb.W)});
    if (gap > kEqualValueTol) {
      throw InputError("pair " + format_complex(a) + ", " + format_complex(b) + " has unequal lifts (gap " + fmt(gap) + ")");
    }
    best = std::min(best, hyp_distance(a, b));
  }
  return best;
}

}  // namespace schwarz
