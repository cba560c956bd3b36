#include "schwarz/jet.hpp"

#include <cmath>
#include <cstdio>

namespace schwarz {

std::string format_complex(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

namespace {

bool finite_c(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Jet of F(a(z)) from F and its first three derivatives at a.f0.
Jet3 chain(cplx d0, cplx d1, cplx d2, cplx d3, const Jet3& a) {
  return jet_compose({d0, d1, d2, d3}, a);
}

void check_off_cut(cplx v, const char* what) {
  if (v.imag() == 0.0 && v.real() <= 0.0) {
    throw DomainError(std::string(what) + ": argument " + format_complex(v) +
                      " lies on the branch cut (-inf, 0]");
  }
}

cplx ipow(cplx base, long n) {
  if (n < 0) {
    if (base == cplx(0.0)) throw DomainError("pow: zero raised to a negative power");
    return 1.0 / ipow(base, -n);
  }
  cplx result = 1.0;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

bool is_integer_exponent(cplx s, long& n) {
  if (s.imag() != 0.0) return false;
  const double r = s.real();
  if (std::abs(r) > 1e6 || std::nearbyint(r) != r) return false;
  n = static_cast<long>(r);
  return true;
}

}  // namespace

bool Jet3::finite() const { return finite_c(f0) && finite_c(f1) && finite_c(f2) && finite_c(f3); }

Jet3 jet_add(const Jet3& a, const Jet3& b) { return {a.f0 + b.f0, a.f1 + b.f1, a.f2 + b.f2, a.f3 + b.f3}; }

Jet3 jet_sub(const Jet3& a, const Jet3& b) { return {a.f0 - b.f0, a.f1 - b.f1, a.f2 - b.f2, a.f3 - b.f3}; }

Jet3 jet_neg(const Jet3& a) { return {-a.f0, -a.f1, -a.f2, -a.f3}; }

Jet3 jet_scale(const Jet3& a, cplx s) { return {s * a.f0, s * a.f1, s * a.f2, s * a.f3}; }

Jet3 jet_mul(const Jet3& a, const Jet3& b) {
  return {a.f0 * b.f0,
          a.f1 * b.f0 + a.f0 * b.f1,
          a.f2 * b.f0 + 2.0 * a.f1 * b.f1 + a.f0 * b.f2,
          a.f3 * b.f0 + 3.0 * a.f2 * b.f1 + 3.0 * a.f1 * b.f2 + a.f0 * b.f3};
}

Jet3 jet_div(const Jet3& a, const Jet3& b) {
  if (b.f0 == cplx(0.0)) throw DomainError("division by a jet with zero value");
  const cplx inv = 1.0 / b.f0;
  // 1/b through the derivatives of 1/x: 1/x, -1/x^2, 2/x^3, -6/x^4.
  const Jet3 recip = chain(inv, -inv * inv, 2.0 * inv * inv * inv, -6.0 * inv * inv * inv * inv, b);
  return jet_mul(a, recip);
}

Jet3 jet_compose(const Jet3& g, const Jet3& f) {
  const cplx f1sq = f.f1 * f.f1;
  return {g.f0,
          g.f1 * f.f1,
          g.f2 * f1sq + g.f1 * f.f2,
          g.f3 * f1sq * f.f1 + 3.0 * g.f2 * f.f1 * f.f2 + g.f1 * f.f3};
}

Jet3 jet_exp(const Jet3& a) {
  const cplx e = std::exp(a.f0);
  return chain(e, e, e, e, a);
}

Jet3 jet_log(const Jet3& a) {
  check_off_cut(a.f0, "log");
  const cplx inv = 1.0 / a.f0;
  return chain(std::log(a.f0), inv, -inv * inv, 2.0 * inv * inv * inv, a);
}

Jet3 jet_sqrt(const Jet3& a) {
  check_off_cut(a.f0, "sqrt");
  const cplx s = std::sqrt(a.f0);
  const cplx s3 = s * s * s;
  return chain(s, 0.5 / s, -0.25 / s3, 0.375 / (s3 * s * s), a);
}

Jet3 jet_pow(const Jet3& a, cplx s) {
  long n = 0;
  if (is_integer_exponent(s, n)) {
    cplx d[4];
    double coeff = 1.0;
    for (int k = 0; k < 4; ++k) {
      d[k] = coeff == 0.0 ? cplx(0.0) : coeff * ipow(a.f0, n - k);
      coeff *= static_cast<double>(n - k);
    }
    return chain(d[0], d[1], d[2], d[3], a);
  }
  check_off_cut(a.f0, "pow");
  const cplx p = std::exp(s * std::log(a.f0));
  const cplx inv = 1.0 / a.f0;
  return chain(p, s * p * inv, s * (s - 1.0) * p * inv * inv, s * (s - 1.0) * (s - 2.0) * p * inv * inv * inv, a);
}

Jet3 jet_pow(const Jet3& a, const Jet3& b) {
  if (b.f1 == cplx(0.0) && b.f2 == cplx(0.0) && b.f3 == cplx(0.0)) return jet_pow(a, b.f0);
  return jet_exp(jet_mul(b, jet_log(a)));
}

Jet3 jet_sin(const Jet3& a) {
  const cplx s = std::sin(a.f0), c = std::cos(a.f0);
  return chain(s, c, -s, -c, a);
}

Jet3 jet_cos(const Jet3& a) {
  const cplx s = std::sin(a.f0), c = std::cos(a.f0);
  return chain(c, -s, -c, s, a);
}

}  // namespace schwarz
