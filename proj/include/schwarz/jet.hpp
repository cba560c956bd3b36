#pragma once

#include <complex>

#include "schwarz/error.hpp"

namespace schwarz {

/// Value and first three complex derivatives of a map at a point.
///
/// Arithmetic follows the Leibniz and Faa di Bruno rules truncated at order 3,
/// so combining jets of f and g yields the exact jet of the combination.
/// Jets with f1 == 0 are representable; callers that need local univalence
/// check it themselves.
struct Jet3 {
  cplx f0{};
  cplx f1{};
  cplx f2{};
  cplx f3{};

  static constexpr Jet3 constant(cplx c) { return {c, 0.0, 0.0, 0.0}; }
  static constexpr Jet3 variable(cplx z) { return {z, 1.0, 0.0, 0.0}; }

  bool finite() const;
  friend bool operator==(const Jet3&, const Jet3&) = default;
};

Jet3 jet_add(const Jet3& a, const Jet3& b);
Jet3 jet_sub(const Jet3& a, const Jet3& b);
Jet3 jet_mul(const Jet3& a, const Jet3& b);
// Throws DomainError when b.f0 == 0.
Jet3 jet_div(const Jet3& a, const Jet3& b);
Jet3 jet_neg(const Jet3& a);
Jet3 jet_scale(const Jet3& a, cplx s);

// Jet of outer(inner(z)), given the jet of `outer` at inner.f0.
Jet3 jet_compose(const Jet3& outer_at_inner, const Jet3& inner);

Jet3 jet_exp(const Jet3& a);
// Principal branches, cut along the non-positive real axis. Evaluation exactly
// on the cut (or at 0) throws DomainError.
Jet3 jet_log(const Jet3& a);
Jet3 jet_sqrt(const Jet3& a);
// a^s. Integer real exponents use repeated multiplication and need no branch;
// otherwise exp(s log a).
Jet3 jet_pow(const Jet3& a, cplx s);
// a^b with a jet exponent, exp(b log a); reduces to jet_pow for constant b.
Jet3 jet_pow(const Jet3& a, const Jet3& b);
Jet3 jet_sin(const Jet3& a);
Jet3 jet_cos(const Jet3& a);

inline Jet3 operator+(const Jet3& a, const Jet3& b) { return jet_add(a, b); }
inline Jet3 operator-(const Jet3& a, const Jet3& b) { return jet_sub(a, b); }
inline Jet3 operator*(const Jet3& a, const Jet3& b) { return jet_mul(a, b); }
inline Jet3 operator/(const Jet3& a, const Jet3& b) { return jet_div(a, b); }
inline Jet3 operator-(const Jet3& a) { return jet_neg(a); }

}  // namespace schwarz
