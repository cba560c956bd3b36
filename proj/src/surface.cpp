#include "schwarz/surface.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace schwarz {

double lift_increment(const HarmonicMap& f, cplx a, cplx b) {
  auto integrand = [&f](cplx s) { return f.q().value(s) * f.h().eval_derivatives(s).f1; };
  QuadratureOptions opts;
  opts.abs_tol = 1e-11;
  return 2.0 * integrate_segment(integrand, a, b, opts).value.imag();
}

LiftSample lift(const HarmonicMap& f, cplx z, cplx basepoint) {
  const HarmonicMap::Local loc = f.local(z);
  if (loc.h.f1 == cplx(0.0)) throw DomainError("lift: h' vanishes at z = " + format_complex(z));
  LiftSample s;
  s.z = z;
  const cplx w = f.value(z);
  s.U = w.real();
  s.V = w.imag();
  s.W = lift_increment(f, basepoint, z);
  s.sigma = std::log(std::abs(loc.h.f1) + std::abs(loc.g1));
  s.K = gauss_curvature(f, z);
  return s;
}

double gauss_curvature(const HarmonicMap& f, cplx z) {
  const HarmonicMap::Local loc = f.local(z);
  const double h1 = std::norm(loc.h.f1);
  if (h1 == 0.0) throw DomainError("Gauss curvature requires h' != 0 at z = " + format_complex(z));
  const double a = 1.0 + std::norm(loc.q.f0);
  const double a2 = a * a;
  return -4.0 * std::norm(loc.q.f1) / (h1 * a2 * a2);
}

HarmonicMap shear(const AnalyticMap& phi, const AnalyticMap& q) {
  if (!phi.expr() || !q.expr()) throw InputError("shear needs expression-backed phi and q");
  const ExprAst dphi = phi.expr()->derivative();
  if (dphi.contains_primitive() || q.expr()->contains_primitive()) {
    throw InputError("shear needs phi' and q free of primitive()");
  }
  const double radius = std::min(phi.domain_radius(), q.domain_radius());
  const ExprPtr qq = ex::mul(q.expr()->ptr(), q.expr()->ptr());
  const ExprPtr hprime = ex::div(dphi.ptr(), ex::sub(ex::lit(1.0), qq));
  const cplx phi0 = phi.value(0.0);
  ExprPtr h = ex::call(Func::Primitive, hprime);
  if (phi0 != cplx(0.0)) h = ex::add(h, ex::lit(phi0));
  const ExprPtr g = ex::call(Func::Primitive, ex::mul(qq, hprime));
  return HarmonicMap(AnalyticMap::from_expr(ExprAst(h), radius), q, AnalyticMap::from_expr(ExprAst(g), radius));
}

SurfaceMesh build_mesh(const HarmonicMap& f, double r_max, std::size_t n_r, std::size_t n_theta, double r_min) {
  if (n_r < 2 || n_theta < 3) throw InputError("mesh needs n_r >= 2 and n_theta >= 3");
  if (!(r_min >= 0.0 && r_max > r_min)) throw InputError("mesh needs 0 <= r_min < r_max");
  SurfaceMesh mesh;
  mesh.n_r = n_r;
  mesh.n_theta = n_theta;
  mesh.vertices.resize(n_r * n_theta);
  mesh.curvature.resize(n_r * n_theta);
  auto point = [&](std::size_t i, std::size_t j) {
    const double r = r_min + (r_max - r_min) * double(i) / double(n_r - 1);
    return std::polar(r, 2.0 * std::numbers::pi * double(j) / double(n_theta));
  };
  auto fail = [&](std::size_t i, std::size_t j, const Error& e) -> NumericError {
    return NumericError("mesh vertex (ring " + std::to_string(i) + ", angle " + std::to_string(j) + ", z = " +
                        format_complex(point(i, j)) + "): " + e.what());
  };

  double w_ray = 0.0;
  cplx prev_ray = f.basepoint();
  for (std::size_t i = 0; i < n_r; ++i) {
    double w = 0.0;
    cplx prev = 0.0;
    for (std::size_t j = 0; j < n_theta; ++j) {
      const cplx z = point(i, j);
      try {
        if (j == 0) {
          w_ray += lift_increment(f, prev_ray, z);
          prev_ray = z;
          w = w_ray;
        } else {
          w += lift_increment(f, prev, z);
        }
        prev = z;
        const cplx uv = f.value(z);
        mesh.vertices[i * n_theta + j] = {uv.real(), uv.imag(), w};
        mesh.curvature[i * n_theta + j] = gauss_curvature(f, z);
      } catch (const Error& e) {
        throw fail(i, j, e);
      }
    }
  }
  for (std::size_t i = 0; i + 1 < n_r; ++i) {
    for (std::size_t j = 0; j < n_theta; ++j) {
      const std::size_t a = i * n_theta + j;
      const std::size_t b = i * n_theta + (j + 1) % n_theta;
      const std::size_t c = (i + 1) * n_theta + j;
      const std::size_t d = (i + 1) * n_theta + (j + 1) % n_theta;
      mesh.faces.push_back({a, b, d});
      mesh.faces.push_back({a, d, c});
    }
  }
  return mesh;
}

void write_obj(const SurfaceMesh& mesh, std::ostream& out) {
  char buf[160];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out << buf;
  }
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_curvature_csv(const SurfaceMesh& mesh, std::ostream& out) {
  char buf[64];
  out << "index,K\n";
  for (std::size_t k = 0; k < mesh.curvature.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", k + 1, mesh.curvature[k]);
    out << buf;
  }
}

}  // namespace schwarz
