#pragma once

#include <array>
#include <functional>
#include <optional>

#include "schwarz/analytic_map.hpp"
#include "schwarz/disk_grid.hpp"

namespace schwarz {

/// Harmonic map f = h + conj(g) whose dilatation g'/h' is the square of q.
///
/// When g is not supplied it is the primitive of q^2 h' from 0, so g(0) = 0.
/// `basepoint` is where the Weierstrass-Enneper height W vanishes.
class HarmonicMap {
 public:
  HarmonicMap(AnalyticMap h, AnalyticMap q, std::optional<AnalyticMap> g = std::nullopt, cplx basepoint = 0.0);

  // q = 0: the analytic map h viewed as a harmonic map.
  static HarmonicMap analytic(AnalyticMap h);

  const AnalyticMap& h() const { return h_; }
  const AnalyticMap& q() const { return q_; }
  const AnalyticMap& g() const { return g_; }
  cplx basepoint() const { return basepoint_; }
  double domain_radius() const;

  // Jets (derivatives only for h) needed by the local formulas.
  struct Local {
    Jet3 h;  // f1..f3 valid; f0 unspecified
    Jet3 q;
    cplx g1;  // g' = q^2 h'
  };
  Local local(cplx z) const;

  cplx value(cplx z) const;      // h(z) + conj(g(z))
  double sigma(cplx z) const;    // log(|h'| + |g'|)
  cplx dilatation(cplx z) const; // q^2
  // |g'(z) - q(z)^2 h'(z)|; zero up to rounding when g is consistent with q.
  double dilatation_residual(cplx z) const;

  // f o phi with phi analytic: (h o phi, q o phi, g o phi). Basepoint is the
  // given one (phi^{-1} of the old basepoint is not tracked).
  HarmonicMap precompose(const AnalyticMap& phi, cplx basepoint = 0.0) const;

 private:
  AnalyticMap h_;
  AnalyticMap q_;
  AnalyticMap g_;
  cplx basepoint_;
};

// Sf = f'''/f' - (3/2)(f''/f')^2. Throws DomainError when f1 == 0.
cplx schwarzian_analytic(const Jet3& j);
cplx schwarzian_analytic(const AnalyticMap& f, cplx z);

// Sf = Sh + 2 conj(q)/(1+|q|^2) (q'' - q' h''/h') - 4 (q' conj(q)/(1+|q|^2))^2.
cplx schwarzian_harmonic(const HarmonicMap& f, cplx z);
cplx schwarzian_harmonic(const HarmonicMap::Local& loc);

// e^{2 sigma} |K| = (|h'| + |g'|)^2 * 4|q'|^2 / (|h'|^2 (1+|q|^2)^4).
double curvature_term(const HarmonicMap& f, cplx z);
double curvature_term(const HarmonicMap::Local& loc);

using Vec3 = std::array<double, 3>;

// Ahlfors' Schwarzian of a curve in R^3 from its first three derivatives.
double ahlfors_s1(const Vec3& d1, const Vec3& d2, const Vec3& d3);
// Same, with derivatives of `curve` at x from Richardson-refined central
// differences (steps 1e-4, 1e-3, 1e-2 for orders 1, 2, 3).
double ahlfors_s1(const std::function<Vec3(double)>& curve, double x);
// Along the real diameter of the Weierstrass-Enneper lift, derivatives taken
// analytically from the jets of h and q.
double ahlfors_s1_lift(const HarmonicMap& f, double x);
// Derivatives (orders 1..3) of the lift at real x.
std::array<Vec3, 3> lift_derivatives(const HarmonicMap& f, double x);

struct NormEstimate {
  double lower = 0.0;  // attained at sup_point
  int grid_depth = 0;
  cplx sup_point{0.0};
  bool converged = false;
  std::size_t samples = 0;
  std::size_t excluded = 0;
  std::vector<Exclusion> exclusions;
};

// Grid lower bound for sup (1 - |z|^2)^2 |sf(z)| over the disk.
NormEstimate norm_estimate(const std::function<cplx(cplx)>& sf, int depth, const SupOptions& opts = {});

}  // namespace schwarz
