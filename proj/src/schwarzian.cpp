#include "schwarz/schwarzian.hpp"

#include <algorithm>
#include <cmath>

namespace schwarz {

namespace {

DomainError located(const DomainError& e, cplx z) {
  const std::string what = e.what();
  if (what.find("z = ") != std::string::npos) return e;
  return DomainError(what + " at z = " + format_complex(z));
}

// Jet of g' = q^2 h' truncated to order 2, shifted into a jet of g.
Jet3 primitive_of_dilatation_jet(const Jet3& hd, const Jet3& qj, cplx value) {
  const Jet3 hprime{hd.f1, hd.f2, hd.f3, 0.0};
  const Jet3 gp = jet_mul(jet_mul(qj, qj), hprime);
  return {value, gp.f0, gp.f1, gp.f2};
}

AnalyticMap default_g(const AnalyticMap& h, const AnalyticMap& q) {
  const double radius = std::min(h.domain_radius(), q.domain_radius());
  auto derivs = [h, q](cplx z) { return primitive_of_dilatation_jet(h.eval_derivatives(z), q.eval_jet(z), 0.0); };
  auto full = [h, q, derivs](cplx z) {
    auto integrand = [&](cplx s) {
      const cplx qs = q.value(s);
      return qs * qs * h.eval_derivatives(s).f1;
    };
    const cplx value = integrate_segment(integrand, 0.0, z).value;
    Jet3 j = derivs(z);
    j.f0 = value;
    return j;
  };
  return AnalyticMap::from_function(full, radius, "primitive(q^2 h')", derivs);
}

Vec3 operator_sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 lincomb(double ca, const Vec3& a, double cb, const Vec3& b) {
  return {ca * a[0] + cb * b[0], ca * a[1] + cb * b[1], ca * a[2] + cb * b[2]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

HarmonicMap::HarmonicMap(AnalyticMap h, AnalyticMap q, std::optional<AnalyticMap> g, cplx basepoint)
    : h_(std::move(h)), q_(std::move(q)), g_(g ? std::move(*g) : default_g(h_, q_)), basepoint_(basepoint) {}

HarmonicMap HarmonicMap::analytic(AnalyticMap h) {
  const double r = h.domain_radius();
  return HarmonicMap(std::move(h), AnalyticMap::parse("0", r), AnalyticMap::parse("0", r));
}

double HarmonicMap::domain_radius() const {
  return std::min({h_.domain_radius(), q_.domain_radius(), g_.domain_radius()});
}

HarmonicMap::Local HarmonicMap::local(cplx z) const {
  Local loc{h_.eval_derivatives(z), q_.eval_jet(z), 0.0};
  loc.g1 = loc.q.f0 * loc.q.f0 * loc.h.f1;
  return loc;
}

cplx HarmonicMap::value(cplx z) const { return h_.value(z) + std::conj(g_.value(z)); }

double HarmonicMap::sigma(cplx z) const {
  const Local loc = local(z);
  return std::log(std::abs(loc.h.f1) + std::abs(loc.g1));
}

cplx HarmonicMap::dilatation(cplx z) const {
  const cplx q = q_.value(z);
  return q * q;
}

double HarmonicMap::dilatation_residual(cplx z) const {
  const Local loc = local(z);
  return std::abs(g_.eval_derivatives(z).f1 - loc.g1);
}

HarmonicMap HarmonicMap::precompose(const AnalyticMap& phi, cplx basepoint) const {
  return HarmonicMap(h_.compose(phi), q_.compose(phi), g_.compose(phi), basepoint);
}

cplx schwarzian_analytic(const Jet3& j) {
  if (j.f1 == cplx(0.0)) {
    throw DomainError("Schwarzian undefined: derivative vanishes (map not locally univalent)");
  }
  const cplx pre = j.f2 / j.f1;
  return j.f3 / j.f1 - 1.5 * pre * pre;
}

cplx schwarzian_analytic(const AnalyticMap& f, cplx z) {
  try {
    return schwarzian_analytic(f.eval_derivatives(z));
  } catch (const DomainError& e) {
    throw located(e, z);
  }
}

cplx schwarzian_harmonic(const HarmonicMap::Local& loc) {
  if (loc.h.f1 == cplx(0.0)) throw DomainError("harmonic Schwarzian requires h' != 0");
  const cplx sh = schwarzian_analytic(loc.h);
  const cplx q = loc.q.f0, q1 = loc.q.f1, q2 = loc.q.f2;
  const double a = 1.0 + std::norm(q);
  const cplx qbar = std::conj(q);
  const cplx t = q1 * qbar / a;
  return sh + (2.0 * qbar / a) * (q2 - q1 * loc.h.f2 / loc.h.f1) - 4.0 * t * t;
}

cplx schwarzian_harmonic(const HarmonicMap& f, cplx z) {
  try {
    return schwarzian_harmonic(f.local(z));
  } catch (const DomainError& e) {
    throw located(e, z);
  }
}

double curvature_term(const HarmonicMap::Local& loc) {
  const double h1 = std::abs(loc.h.f1);
  if (h1 == 0.0) throw DomainError("curvature requires h' != 0");
  const double lambda = h1 + std::abs(loc.g1);
  const double a = 1.0 + std::norm(loc.q.f0);
  const double a2 = a * a;
  return lambda * lambda * 4.0 * std::norm(loc.q.f1) / (h1 * h1 * a2 * a2);
}

double curvature_term(const HarmonicMap& f, cplx z) {
  try {
    return curvature_term(f.local(z));
  } catch (const DomainError& e) {
    throw located(e, z);
  }
}

double ahlfors_s1(const Vec3& d1, const Vec3& d2, const Vec3& d3) {
  const double speed2 = dot(d1, d1);
  if (!(speed2 > 0.0)) throw DomainError("Ahlfors Schwarzian undefined: curve has zero speed");
  const double c = dot(d1, d2);
  return dot(d1, d3) / speed2 - 3.0 * c * c / (speed2 * speed2) + 1.5 * dot(d2, d2) / speed2;
}

double ahlfors_s1(const std::function<Vec3(double)>& curve, double x) {
  auto d1 = [&](double h) { return lincomb(0.5 / h, curve(x + h), -0.5 / h, curve(x - h)); };
  auto d2 = [&](double h) {
    const Vec3 mid = curve(x);
    const Vec3 s = lincomb(1.0, curve(x + h), 1.0, curve(x - h));
    return lincomb(1.0 / (h * h), s, -2.0 / (h * h), mid);
  };
  auto d3 = [&](double h) {
    const Vec3 a = operator_sub(curve(x + 2 * h), curve(x - 2 * h));
    const Vec3 b = operator_sub(curve(x + h), curve(x - h));
    return lincomb(0.5 / (h * h * h), a, -1.0 / (h * h * h), b);
  };
  // Central schemes have error O(h^2); one Richardson step removes it.
  auto richardson = [](const Vec3& coarse, const Vec3& fine) { return lincomb(4.0 / 3.0, fine, -1.0 / 3.0, coarse); };
  const Vec3 p1 = richardson(d1(1e-4), d1(5e-5));
  const Vec3 p2 = richardson(d2(1e-3), d2(5e-4));
  const Vec3 p3 = richardson(d3(1e-2), d3(5e-3));
  return ahlfors_s1(p1, p2, p3);
}

std::array<Vec3, 3> lift_derivatives(const HarmonicMap& f, double x) {
  const HarmonicMap::Local loc = f.local(x);
  const Jet3 g = primitive_of_dilatation_jet(loc.h, loc.q, 0.0);
  // q h' and its first two derivatives; W' = 2 Im(q h').
  const Jet3 hprime{loc.h.f1, loc.h.f2, loc.h.f3, 0.0};
  const Jet3 w = jet_mul(loc.q, hprime);
  const cplx hk[3] = {loc.h.f1, loc.h.f2, loc.h.f3};
  const cplx gk[3] = {g.f1, g.f2, g.f3};
  const cplx wk[3] = {w.f0, w.f1, w.f2};
  std::array<Vec3, 3> out{};
  for (int k = 0; k < 3; ++k) {
    const cplx uv = hk[k] + std::conj(gk[k]);
    out[k] = {uv.real(), uv.imag(), 2.0 * wk[k].imag()};
  }
  return out;
}

double ahlfors_s1_lift(const HarmonicMap& f, double x) {
  const auto d = lift_derivatives(f, x);
  return ahlfors_s1(d[0], d[1], d[2]);
}

NormEstimate norm_estimate(const std::function<cplx(cplx)>& sf, int depth, const SupOptions& opts) {
  auto weighted = [&](cplx z) {
    const double w = 1.0 - std::norm(z);
    return w * w * std::abs(sf(z));
  };
  const SupResult sup = disk_sup(weighted, depth, opts);
  NormEstimate out;
  out.lower = sup.value;
  out.grid_depth = depth;
  out.sup_point = sup.point;
  out.converged = sup.converged;
  out.samples = sup.samples;
  out.excluded = sup.excluded;
  out.exclusions = sup.exclusions;
  return out;
}

}  // namespace schwarz
