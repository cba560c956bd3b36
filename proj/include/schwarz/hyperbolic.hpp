#pragma once

#include "schwarz/jet.hpp"

namespace schwarz {

// Pseudo-hyperbolic distance |(a - b) / (1 - conj(a) b)|.
double pseudo_distance(cplx a, cplx b);

// Hyperbolic distance d(a, b) = (1/2) log((1 + rho) / (1 - rho)); curvature -4.
// Throws DomainError for points outside the open unit disk.
double hyp_distance(cplx a, cplx b);

/// Disk automorphism z -> e^{i theta} (z - a) / (1 - conj(a) z), |a| < 1,
/// theta in (-pi, pi].
class DiskAutomorphism {
 public:
  DiskAutomorphism() = default;
  DiskAutomorphism(cplx a, double theta);

  static DiskAutomorphism identity() { return {}; }

  cplx a() const { return a_; }
  double theta() const { return theta_; }

  cplx operator()(cplx z) const;
  Jet3 apply(cplx z) const;
  DiskAutomorphism inverse() const;
  // (*this)(other(z)).
  DiskAutomorphism after(const DiskAutomorphism& other) const;

 private:
  cplx a_{0.0};
  double theta_ = 0.0;
};

// Jet of T at z; |z| < 1 required.
Jet3 apply(const DiskAutomorphism& t, cplx z);

struct Through {
  DiskAutomorphism map;
  double b = 0.0;  // T(b) = beta, b = rho(alpha, beta) > 0
};

// Automorphism with T(0) = alpha and T(b) = beta for a real b > 0.
// Throws InputError when alpha == beta.
Through automorphism_through(cplx alpha, cplx beta);

}  // namespace schwarz
