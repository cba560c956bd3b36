#include "schwarz/hyperbolic.hpp"

#include <utility>

#include <cmath>
#include <numbers>

namespace schwarz {

namespace {

void require_in_disk(cplx z, const char* what) {
  if (!(std::norm(z) < 1.0)) throw DomainError(std::string(what) + ": " + format_complex(z) + " is not in the unit disk");
}

double normalize_angle(double t) {
  t = std::remainder(t, 2.0 * std::numbers::pi);  // [-pi, pi]
  if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
  return t;
}

}  // namespace

double pseudo_distance(cplx a, cplx b) {
  require_in_disk(a, "pseudo_distance");
  require_in_disk(b, "pseudo_distance");
  // Canonical argument order makes the result exactly symmetric.
  if (std::make_pair(b.real(), b.imag()) < std::make_pair(a.real(), a.imag())) std::swap(a, b);
  return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

double hyp_distance(cplx a, cplx b) {
  const double rho = pseudo_distance(a, b);
  return std::atanh(rho);
}

DiskAutomorphism::DiskAutomorphism(cplx a, double theta) : a_(a), theta_(normalize_angle(theta)) {
  require_in_disk(a, "automorphism parameter");
}

cplx DiskAutomorphism::operator()(cplx z) const {
  return std::polar(1.0, theta_) * (z - a_) / (1.0 - std::conj(a_) * z);
}

Jet3 DiskAutomorphism::apply(cplx z) const {
  require_in_disk(z, "automorphism argument");
  const cplx rot = std::polar(1.0, theta_);
  const cplx ab = std::conj(a_);
  const cplx inv = 1.0 / (1.0 - ab * z);
  const double scale = 1.0 - std::norm(a_);
  const cplx d1 = rot * scale * inv * inv;
  return {rot * (z - a_) * inv, d1, 2.0 * ab * d1 * inv, 6.0 * ab * ab * d1 * inv * inv};
}

DiskAutomorphism DiskAutomorphism::inverse() const {
  // w = e^{it}(z-a)/(1-conj(a)z)  <=>  z = (w e^{-it} + a)/(1 + conj(a) e^{-it} w)
  //   = e^{-it} (w + a e^{it}) / (1 + conj(a e^{it}) w).
  const cplx rot = std::polar(1.0, theta_);
  return DiskAutomorphism(-a_ * rot, -theta_);
}

DiskAutomorphism DiskAutomorphism::after(const DiskAutomorphism& other) const {
  // The composite sends other^{-1}(a_) to 0; its rotation is the argument of
  // its derivative there.
  const cplx zero_pre = other.inverse()(a_);
  const cplx deriv = apply(other(zero_pre)).f1 * other.apply(zero_pre).f1;
  return DiskAutomorphism(zero_pre, std::arg(deriv));
}

Jet3 apply(const DiskAutomorphism& t, cplx z) { return t.apply(z); }

Through automorphism_through(cplx alpha, cplx beta) {
  require_in_disk(alpha, "automorphism_through");
  require_in_disk(beta, "automorphism_through");
  if (alpha == beta) throw InputError("automorphism_through: points coincide");
  // w = M^{-1}(beta) for M(z) = (z + alpha)/(1 + conj(alpha) z); rotate w onto the positive axis.
  const cplx w = (beta - alpha) / (1.0 - std::conj(alpha) * beta);
  const double psi = std::arg(w);
  Through out{DiskAutomorphism(-alpha * std::polar(1.0, -psi), psi), std::abs(w)};
  return out;
}

}  // namespace schwarz
