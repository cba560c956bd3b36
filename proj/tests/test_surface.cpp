#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "schwarz/gallery.hpp"
#include "schwarz/surface.hpp"
#include "support.hpp"

using namespace schwarz;
using testing::kPi;

TEST_CASE("catenoid lift examples") {
  const HarmonicMap f = gallery::catenoid();
  const LiftSample a = lift(f, 2.0);
  CHECK(a.U == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(std::abs(a.V) < 1e-12);
  CHECK(a.W == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-10));
  const LiftSample b = lift(f, cplx(0.0, 1.0));
  CHECK(std::abs(b.U) < 1e-12);
  CHECK(b.V == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(b.W) < 1e-10);

  // U = (r + 1/r) cos t, V = (r - 1/r) sin t with the displayed sign of f, W = 2 log r.
  for (cplx z : {std::polar(0.5, 0.3), std::polar(1.7, -2.0), std::polar(3.0, 1.0)}) {
    const LiftSample s = lift(f, z);
    const cplx v = z + 1.0 / std::conj(z);
    CHECK(s.U == doctest::Approx(v.real()).epsilon(1e-12));
    CHECK(s.V == doctest::Approx(v.imag()).epsilon(1e-12));
    CHECK(s.W == doctest::Approx(2.0 * std::log(std::abs(z))).epsilon(1e-9));
    CHECK(s.K <= 0.0);
  }
}

TEST_CASE("lift of an analytic map is planar") {
  const HarmonicMap f = HarmonicMap::analytic(AnalyticMap::parse("z/(1-z)^2"));
  for (cplx z : testing::disk_points(20, 0.9, 5)) {
    const LiftSample s = lift(f, z);
    CHECK(s.W == 0.0);
    CHECK(s.K == 0.0);
    CHECK(cplx(s.U, s.V) == f.value(z));
  }
}

TEST_CASE("lift increments add along a path") {
  const HarmonicMap f = gallery::koebe_shear();
  const cplx a(0.1, 0.2), b(-0.3, 0.4), c(0.5, -0.1);
  CHECK(lift_increment(f, a, b) + lift_increment(f, b, c) ==
        doctest::Approx(lift_increment(f, a, c)).epsilon(1e-10));
  CHECK(lift(f, c).W - lift(f, a).W == doctest::Approx(lift_increment(f, a, c)).epsilon(1e-10));
}

TEST_CASE("lift matches an independent quadrature of 2 Im q h'") {
  const HarmonicMap f = gallery::koebe_shear();
  // h' = (1 - z)^-4, q = z; Simpson on the segment [0, z].
  auto integrand = [](cplx z) { return z / std::pow(1.0 - z, 4); };
  for (cplx z : testing::disk_points(10, 0.8, 12)) {
    const int n = 20000;
    cplx sum = integrand(0.0) + integrand(z);
    for (int k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * integrand(z * (double(k) / n));
    const double want = 2.0 * (sum * z / (3.0 * n)).imag();
    CHECK(lift(f, z).W == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("Gauss curvature examples") {
  const HarmonicMap f = gallery::catenoid();
  CHECK(gauss_curvature(f, 1.0) == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(gauss_curvature(f, cplx(0.0, 2.0)) == doctest::Approx(-4.0 * 16.0 / 625.0).epsilon(1e-14));
  const HarmonicMap flat(AnalyticMap::parse("z"), AnalyticMap::parse("0.5"));
  CHECK(gauss_curvature(flat, cplx(0.3, 0.2)) == 0.0);
  CHECK_THROWS_AS(gauss_curvature(HarmonicMap(AnalyticMap::parse("z^2"), AnalyticMap::parse("z")), 0.0), DomainError);
  for (cplx z : testing::disk_points(50, 0.95, 9)) CHECK(gauss_curvature(gallery::koebe_shear(), z) <= 0.0);
}

TEST_CASE("conformal factor is |h'| + |g'|") {
  const HarmonicMap f = gallery::koebe_shear();
  for (cplx z : testing::disk_points(20, 0.9, 21)) {
    const double direct = std::abs(1.0 / std::pow(1.0 - z, 4)) + std::abs(z * z / std::pow(1.0 - z, 4));
    CHECK(std::exp(lift(f, z).sigma) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("the lift is conformal with metric e^sigma") {
  // Finite differences of (U, V, W) in x and y have equal length e^sigma and are orthogonal.
  for (const HarmonicMap& f : {gallery::koebe_shear(), gallery::catenoid_composite(1.0, 0.05)}) {
    for (cplx z : testing::disk_points(8, 0.7, 31)) {
      const double h = 1e-5;
      auto coords = [&](cplx w) {
        const LiftSample s = lift(f, w);
        return std::array<double, 3>{s.U, s.V, s.W};
      };
      auto diff = [&](cplx dir) {
        const auto p = coords(z + h * dir), m = coords(z - h * dir);
        return std::array<double, 3>{(p[0] - m[0]) / (2 * h), (p[1] - m[1]) / (2 * h), (p[2] - m[2]) / (2 * h)};
      };
      const auto dx = diff(1.0), dy = diff(cplx(0.0, 1.0));
      const double lx = std::sqrt(dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2]);
      const double ly = std::sqrt(dy[0] * dy[0] + dy[1] * dy[1] + dy[2] * dy[2]);
      const double scale = std::exp(f.sigma(z));
      CHECK(lx == doctest::Approx(scale).epsilon(1e-6));
      CHECK(ly == doctest::Approx(scale).epsilon(1e-6));
      CHECK(std::abs(dx[0] * dy[0] + dx[1] * dy[1] + dx[2] * dy[2]) < 1e-6 * scale * scale);
    }
  }
}

TEST_CASE("shear of the Koebe function") {
  const HarmonicMap f = gallery::koebe_shear();
  const cplx z0(0.2, 0.1);
  auto h_closed = [](cplx z) { return 1.0 / (3.0 * std::pow(1.0 - z, 3)); };
  auto g_closed = [](cplx z) { return (z * z - z + 1.0 / 3.0) / std::pow(1.0 - z, 3); };
  const cplx dh = f.h().value(z0) - h_closed(z0), dg = f.g().value(z0) - g_closed(z0);
  for (cplx z : testing::disk_points(30, 0.9, 77)) {
    CHECK(std::abs(f.h().value(z) - h_closed(z) - dh) < 1e-10 * std::max(1.0, std::abs(h_closed(z))));
    CHECK(std::abs(f.g().value(z) - g_closed(z) - dg) < 1e-10 * std::max(1.0, std::abs(g_closed(z))));
    const cplx k = z / ((1.0 - z) * (1.0 - z));
    CHECK(std::abs(f.h().value(z) - f.g().value(z) - k) < 1e-10 * std::max(1.0, std::abs(k)));
    CHECK(std::abs(f.dilatation(z) - z * z) < 1e-12);
  }
  CHECK(f.g().value(0.0) == cplx(0.0));
  CHECK(f.h().value(0.0) == cplx(0.0));
}

TEST_CASE("shear round trip and degenerate cases") {
  for (const auto& [phi, q] : {std::pair{"exp(z)", "z/2"}, std::pair{"z+z^2/3", "(z-0.2)/(1-0.2*z)"},
                               std::pair{"log((1+z)/(1-z))", "0.3i*z^2"}}) {
    const AnalyticMap pm = AnalyticMap::parse(phi);
    const HarmonicMap f = shear(pm, AnalyticMap::parse(q));
    for (cplx z : testing::disk_points(30, 0.9, 3)) {
      CHECK(std::abs(f.h().value(z) - f.g().value(z) - pm.value(z)) < 1e-10 * std::max(1.0, std::abs(pm.value(z))));
    }
  }
  const AnalyticMap phi = AnalyticMap::parse("exp(z)");
  const HarmonicMap f = shear(phi, AnalyticMap::parse("0"));
  for (cplx z : testing::disk_points(10, 0.9, 4)) {
    CHECK(std::abs(f.h().value(z) - phi.value(z)) < 1e-12);
    CHECK(std::abs(f.g().value(z)) < 1e-14);
  }
  // q^2 = 1 at z = 1/2.
  const HarmonicMap bad = shear(AnalyticMap::parse("z"), AnalyticMap::parse("2*z"));
  CHECK_THROWS_AS(bad.local(0.5), DomainError);
}

TEST_CASE("mesh counts and indexing") {
  const HarmonicMap f = gallery::koebe_shear();
  const SurfaceMesh m = build_mesh(f, 0.9, 2, 3);
  CHECK(m.vertices.size() == 6);
  CHECK(m.faces.size() == 6);
  CHECK(m.curvature.size() == 6);
  const SurfaceMesh big = build_mesh(f, 0.9, 7, 11, 0.1);
  CHECK(big.vertices.size() == 77);
  CHECK(big.faces.size() == 2 * 6 * 11);
  for (const auto& face : big.faces) {
    for (std::size_t i : face) CHECK(i < big.vertices.size());
    CHECK(std::set<std::size_t>(face.begin(), face.end()).size() == 3);
  }
  // Every interior edge is shared by exactly two triangles around the annulus.
  std::map<std::pair<std::size_t, std::size_t>, int> edges;
  for (const auto& face : big.faces) {
    for (int k = 0; k < 3; ++k) {
      const std::size_t a = face[k], b = face[(k + 1) % 3];
      ++edges[{std::min(a, b), std::max(a, b)}];
    }
  }
  for (const auto& [e, n] : edges) {
    const bool boundary = (e.first / 11 == 0 && e.second / 11 == 0) || (e.first / 11 == 6 && e.second / 11 == 6);
    CHECK(n == (boundary ? 1 : 2));
  }
}

TEST_CASE("mesh vertices follow the lift") {
  const HarmonicMap cat = gallery::catenoid();
  const std::size_t nr = 16, nt = 12;
  const SurfaceMesh m = build_mesh(cat, 2.0, nr, nt, 0.5);
  for (std::size_t i = 0; i < nr; ++i) {
    const double r = 0.5 + 1.5 * double(i) / double(nr - 1);
    CHECK(m.vertices[i * nt][2] == doctest::Approx(2.0 * std::log(r)).epsilon(1e-9));
    for (std::size_t j = 0; j < nt; ++j) {
      // The catenoid W depends on r only.
      CHECK(m.vertices[i * nt + j][2] == doctest::Approx(2.0 * std::log(r)).epsilon(1e-8));
    }
  }
  const SurfaceMesh flat = build_mesh(HarmonicMap::analytic(AnalyticMap::parse("exp(z)")), 0.9, 4, 8);
  for (const auto& v : flat.vertices) CHECK(v[2] == 0.0);
  for (double k : flat.curvature) CHECK(k == 0.0);
}

TEST_CASE("mesh export formats") {
  const SurfaceMesh m = build_mesh(gallery::catenoid(), 2.0, 2, 3, 1.0);
  std::ostringstream obj, csv;
  write_obj(m, obj);
  write_curvature_csv(m, csv);
  std::istringstream in(obj.str());
  std::string line;
  int nv = 0, nf = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      double u, v, w;
      CHECK(static_cast<bool>(ls >> u >> v >> w));
      ++nv;
    } else if (tag == "f") {
      std::size_t a, b, c;
      CHECK(static_cast<bool>(ls >> a >> b >> c));
      CHECK(a >= 1);
      CHECK(c <= 6);
      ++nf;
    }
  }
  CHECK(nv == 6);
  CHECK(nf == 6);
  std::istringstream cin(csv.str());
  std::getline(cin, line);
  CHECK(line == "index,K");
  int rows = 0;
  while (std::getline(cin, line)) {
    ++rows;
    CHECK(line.rfind(std::to_string(rows) + ",", 0) == 0);
  }
  CHECK(rows == 6);
  // First vertex is z = 1: the waist of the catenoid, K = -1/4.
  CHECK(m.curvature[0] == doctest::Approx(-0.25));
}

TEST_CASE("mesh rejects bad grids") {
  const HarmonicMap f = gallery::koebe_shear();
  CHECK_THROWS_AS(build_mesh(f, 0.9, 1, 3), InputError);
  CHECK_THROWS_AS(build_mesh(f, 0.9, 2, 2), InputError);
  CHECK_THROWS_AS(build_mesh(f, 1.5, 2, 3), NumericError);
  CHECK_THROWS_AS(build_mesh(f, 0.9, 2, 3, 0.95), InputError);
}

TEST_CASE("Koebe shear norm regression at depth 12") {
  const HarmonicMap f = gallery::koebe_shear();
  const NormEstimate n = norm_estimate([&](cplx z) { return schwarzian_harmonic(f, z); }, 12);
  // Brute force of the closed form over the same radii puts the sup on the outermost
  // ring, on the positive axis.
  const double r = 1.0 - std::ldexp(1.0, -12);
  const double oracle = std::pow(1.0 - r * r, 2) * 4.0 * std::pow(1.0 / (1.0 - r) + r / (1.0 + r * r), 2);
  constexpr double kFrozen = 15.999999523046416;
  CHECK(oracle == doctest::Approx(kFrozen).epsilon(1e-14));
  CHECK(n.lower == doctest::Approx(kFrozen).epsilon(1e-12));
  CHECK(n.lower <= 45.0);
  CHECK(n.sup_point.real() == doctest::Approx(r));
}
