#pragma once

#include <iosfwd>
#include <vector>

#include "schwarz/schwarzian.hpp"

namespace schwarz {

// A point of the Weierstrass-Enneper lift (U, V, W) of f = h + conj(g).
struct LiftSample {
  cplx z{};
  double U = 0.0, V = 0.0, W = 0.0;
  double sigma = 0.0;  // log(|h'| + |g'|)
  double K = 0.0;      // Gauss curvature, <= 0
};

// W(b) - W(a) = 2 Im of the integral of q h' over the segment [a, b].
double lift_increment(const HarmonicMap& f, cplx a, cplx b);

// Lift at z with W measured from `basepoint` along the straight segment.
LiftSample lift(const HarmonicMap& f, cplx z, cplx basepoint);
inline LiftSample lift(const HarmonicMap& f, cplx z) { return lift(f, z, f.basepoint()); }

// K = -4|q'|^2 / (|h'|^2 (1+|q|^2)^4). Throws DomainError when h' = 0.
double gauss_curvature(const HarmonicMap& f, cplx z);

// Horizontal shear of phi with dilatation q^2: h' = phi'/(1-q^2),
// g' = q^2 phi'/(1-q^2), normalized so h(0) = phi(0), g(0) = 0 and h - g = phi.
// Needs expression-backed phi and q whose derivatives are primitive-free.
HarmonicMap shear(const AnalyticMap& phi, const AnalyticMap& q);

struct SurfaceMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::size_t, 3>> faces;  // 0-based
  std::vector<double> curvature;
  std::size_t n_r = 0, n_theta = 0;
};

// Polar grid r_min..r_max (n_r rings, r-major) by n_theta angles from 0.
// W is accumulated along the theta = 0 ray and then around each ring by short
// chords, so the path avoids the origin when r_min > 0.
SurfaceMesh build_mesh(const HarmonicMap& f, double r_max, std::size_t n_r, std::size_t n_theta, double r_min = 0.0);

// `v U V W` lines then `f i j k` (1-based).
void write_obj(const SurfaceMesh& mesh, std::ostream& out);
// `index,K` with a header row; index is 1-based like the OBJ vertices.
void write_curvature_csv(const SurfaceMesh& mesh, std::ostream& out);

}  // namespace schwarz
