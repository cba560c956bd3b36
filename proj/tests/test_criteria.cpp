#include <doctest.h>

#include "schwarz/criteria.hpp"
#include "schwarz/gallery.hpp"
#include "schwarz/hyperbolic.hpp"
#include "support.hpp"

using namespace schwarz;
using testing::kPi;

namespace {

constexpr int kDepth = 10;

AnalyticMap automorphism_map(const DiskAutomorphism& t) {
  return AnalyticMap::from_function([t](cplx z) { return t.apply(z); }, 1.0, "T");
}

}  // namespace

TEST_CASE("check_bound examples") {
  SUBCASE("Hille delta = 1") {
    const CriterionVerdict v = check_bound(gallery::hille(1.0), NehariFunction::classical(), kDepth);
    CHECK(v.minimal_C == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(v.classification == Classification::UniformLocal);
    REQUIRE(v.separation_hyperbolic);
    CHECK(*v.separation_hyperbolic == doctest::Approx(kPi).epsilon(1e-9));
    CHECK_FALSE(v.finite_valence);
    CHECK_FALSE(v.separation_euclidean);
  }
  SUBCASE("Koebe") {
    const CriterionVerdict v = check_bound(gallery::koebe(), NehariFunction::classical(), kDepth);
    CHECK(v.minimal_C == doctest::Approx(6.0).epsilon(1e-10));
    CHECK(v.classification == Classification::UniformLocal);
    REQUIRE(v.delta);
    CHECK(*v.delta == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(*v.separation_hyperbolic == doctest::Approx(kPi / std::sqrt(2.0)).epsilon(1e-9));
  }
  SUBCASE("|Sf| <= pi^2/2 with the constant weight is univalent") {
    // S(exp(a z)) = -a^2 / 2.
    const CriterionVerdict v = check_bound(AnalyticMap::parse("exp(2*z)"), NehariFunction::constant(), kDepth);
    CHECK(v.minimal_C == doctest::Approx(8.0 / (kPi * kPi)).epsilon(1e-12));
    CHECK(v.classification == Classification::Univalent);
    CHECK(v.finite_valence);
    REQUIRE(v.separation_euclidean);
    CHECK(*v.separation_euclidean == doctest::Approx(std::sqrt(2.0 / 2.0) * kPi).epsilon(1e-12));
  }
}

TEST_CASE("check_bound classifies by mu") {
  const AnalyticMap f = AnalyticMap::parse("exp(4*z)");  // |Sf| = 8
  SUBCASE("constant weight, mu = 0") {
    const CriterionVerdict v = check_bound(f, NehariFunction::constant(), kDepth);
    CHECK(v.minimal_C == doctest::Approx(32.0 / (kPi * kPi)).epsilon(1e-12));
    CHECK(v.classification == Classification::FiniteValence);
    CHECK(v.mu_used == 0.0);
  }
  SUBCASE("linear weight, mu = 0") {
    const CriterionVerdict v = check_bound(f, NehariFunction::linear(), kDepth, 4.0);
    CHECK(v.minimal_C == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(v.classification == Classification::FiniteValence);
    REQUIRE(v.bound_holds);
    CHECK(*v.bound_holds);
  }
  SUBCASE("parametric weight, C mu >= 2") {
    const CriterionVerdict v = check_bound(f, NehariFunction::parametric(1.5), kDepth, 5.0);
    CHECK(v.minimal_C == doctest::Approx(8.0 / 1.5).epsilon(1e-12));
    CHECK(v.classical_C == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(v.classification == Classification::UniformLocal);
    CHECK(*v.delta == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
    CHECK_FALSE(*v.bound_holds);
    CHECK(v.details.find("exceeded") != std::string::npos);
  }
}

TEST_CASE("check_bound is inconclusive near the threshold and on poorly sampled grids") {
  const CriterionVerdict near = check_bound(gallery::hille(0.01), NehariFunction::classical(), kDepth);
  CHECK(near.minimal_C == doctest::Approx(2.0002).epsilon(1e-10));
  CHECK(near.classification == Classification::Inconclusive);

  const AnalyticMap half = AnalyticMap::from_function(
      [](cplx z) {
        if (z.real() < 0.0) throw DomainError("left half excluded");
        return Jet3{z, 1.0, 0.0, 0.0};
      },
      1.0, "half");
  const CriterionVerdict v = check_bound(half, NehariFunction::classical(), 6);
  CHECK(v.excluded > v.samples / 100);
  CHECK(v.classification == Classification::Inconclusive);
  CHECK_FALSE(v.exclusions.empty());
}

TEST_CASE("classify_finite_valence examples") {
  CHECK(classify_finite_valence(3.0, NehariFunction::linear()));
  CHECK_FALSE(classify_finite_valence(4.0, NehariFunction::classical()));
  CHECK(classify_finite_valence(2.5, NehariFunction::parametric(1.5)));  // 2.5 * 0.75 = 1.875
  CHECK_FALSE(classify_finite_valence(8.0 / 3.0, NehariFunction::parametric(1.5)));
  CHECK_THROWS_AS(classify_finite_valence(0.0, NehariFunction::linear()), InputError);
  CHECK_THROWS_AS(classify_finite_valence(-1.0, NehariFunction::linear()), InputError);
}

TEST_CASE("Hille valence ladder matches the closed-form roots") {
  for (double delta : {0.5, 1.0, 2.0}) {
    const AnalyticMap f = gallery::hille(delta);
    for (double r : {0.5, 0.9, 0.99, 0.999, 0.9999}) {
      // Keep the contour off the roots tanh(n pi / delta).
      bool near_root = false;
      for (int n = 1; n < 20; ++n) near_root |= std::abs(std::tanh(n * kPi / delta) - r) < 1e-5;
      if (near_root) continue;
      CAPTURE(delta);
      CAPTURE(r);
      const ValenceCount c = count_valence(f, 1.0, r);
      CHECK(c.count == testing::hille_root_count(delta, r));
      CHECK(c.residual < 1e-3);
    }
  }
  // The closed form reads 2 floor((delta / 2 pi) log((1 + r)/(1 - r))) + 1.
  for (double r : {0.9, 0.99, 0.999}) {
    const int ladder = 2 * int(std::floor(std::log((1.0 + r) / (1.0 - r)) / (2.0 * kPi))) + 1;
    CHECK(count_valence(gallery::hille(1.0), 1.0, r).count == ladder);
  }
  CHECK(count_valence(gallery::hille(1.0), 1.0, 0.999).count == 3);
}

TEST_CASE("count_valence on univalent maps") {
  CHECK(count_valence(gallery::koebe(), 0.0, 0.5).count == 1);
  const AnalyticMap t = automorphism_map(DiskAutomorphism(cplx(0.2, -0.1), 0.7));
  for (cplx w : {cplx(0.0), cplx(0.3, 0.2), cplx(-0.5, 0.1)}) CHECK(count_valence(t, w, 0.9).count == 1);
  CHECK(count_valence(t, 0.95, 0.9).count == 0);
  // z^3 = w has three roots inside.
  CHECK(count_valence(AnalyticMap::parse("z^3"), cplx(0.1, 0.05), 0.9).count == 3);
}

TEST_CASE("count_valence errors") {
  CHECK_THROWS_AS(count_valence(AnalyticMap::parse("z"), 0.5, 0.5), NumericError);
  CHECK_THROWS_AS(count_valence(gallery::hille(1.0), 1.0, std::tanh(kPi)), NumericError);
  CHECK_THROWS_AS(count_valence(AnalyticMap::parse("z"), 0.0, 1.0), InputError);
  CHECK_THROWS_AS(count_valence(AnalyticMap::parse("z"), 0.0, 0.0), InputError);
}

TEST_CASE("verdicts are Moebius invariant") {
  for (const AnalyticMap& f : {gallery::hille(1.0), gallery::koebe(), AnalyticMap::parse("exp(3*z)")}) {
    const double base = check_bound(f, NehariFunction::classical(), kDepth).minimal_C;
    for (const DiskAutomorphism& t : {DiskAutomorphism(cplx(0.3, 0.4), 1.0), DiskAutomorphism(-0.6, -2.0)}) {
      const CriterionVerdict v = check_bound(f.compose(automorphism_map(t)), NehariFunction::classical(), kDepth);
      CHECK(v.minimal_C == doctest::Approx(base).epsilon(0.01));
      CHECK(v.classification == check_bound(f, NehariFunction::classical(), kDepth).classification);
    }
  }
}

TEST_CASE("harmonic path with q = 0 equals the analytic path bit for bit") {
  for (const char* src : {"z/(1-z)^2", "exp(3*z)", "((1+z)/(1-z))^(0.7i)"}) {
    const AnalyticMap f = AnalyticMap::parse(src);
    for (const NehariFunction& p : {NehariFunction::classical(), NehariFunction::parametric(1.3)}) {
      const CriterionVerdict a = check_bound(f, p, 8);
      const CriterionVerdict h = check_bound(HarmonicMap::analytic(f), p, 8);
      CHECK(a.minimal_C == h.minimal_C);
      CHECK(a.classical_C == h.classical_C);
      CHECK(a.sup_point == h.sup_point);
      CHECK(a.classification == h.classification);
    }
  }
}

TEST_CASE("separation audit") {
  const AnalyticMap f = gallery::hille(1.0);
  CHECK(separation_audit(f, {{0.0, std::tanh(kPi)}}) == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(separation_audit(f, {{0.0, std::tanh(kPi)}, {std::tanh(kPi), std::tanh(2 * kPi)}}) ==
        doctest::Approx(kPi).epsilon(1e-7));
  CHECK_THROWS_AS(separation_audit(f, {{0.3, 0.3}}), InputError);
  CHECK_THROWS_AS(separation_audit(f, {{0.0, 0.5}}), InputError);
  CHECK_THROWS_AS(separation_audit(f, {}), InputError);

  // The composite catenoid repeats its lift at x_n = tanh(n pi / delta).
  for (double delta : {1.0, 2.0}) {
    const HarmonicMap F = gallery::catenoid_composite(delta, 0.05);
    const double x1 = std::tanh(kPi / delta);
    CHECK(separation_audit(F, {{0.0, x1}}) == doctest::Approx(kPi / delta).epsilon(1e-9));
    CHECK_THROWS_AS(separation_audit(F, {{0.0, 0.5 * x1}}), InputError);
  }
}

TEST_CASE("catenoid composite verdict") {
  const HarmonicMap F = gallery::catenoid_composite(1.0, 0.05);
  const CriterionVerdict v = check_bound(F, NehariFunction::classical(), kDepth);
  // Equality holds on the real diameter, so the sup is 2(1 + delta^2).
  CHECK(v.minimal_C == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(v.classification == Classification::UniformLocal);
  CHECK(*v.separation_hyperbolic == doctest::Approx(kPi).epsilon(1e-7));
}
