#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/nehari.hpp"
#include "schwarz/schwarzian.hpp"

namespace schwarz {

enum class Classification { Univalent, UniformLocal, FiniteValence, Inconclusive };

const char* to_string(Classification c);

/// Outcome of sampling |Sf| (+ e^{2 sigma}|K| for harmonic maps) against C p(|z|).
///
/// `minimal_C` is the sampled sup of LHS / p(|z|), a lower bound for the
/// smallest admissible constant. `classical_C` is the same sup against
/// (1 - |z|^2)^-2; it fixes delta through classical_C = 2(1 + delta^2) and the
/// hyperbolic separation pi / delta. Verdicts within 1e-3 of the sharp
/// threshold 2 are Inconclusive, as are grids with more than 1% exclusions.
struct CriterionVerdict {
  double minimal_C = 0.0;
  double classical_C = 0.0;
  Classification classification = Classification::Inconclusive;
  std::optional<double> delta;
  std::optional<double> separation_hyperbolic;  // +inf when classical_C <= 2
  std::optional<double> separation_euclidean;   // constant weight only
  bool finite_valence = false;
  std::optional<double> supplied_C;
  std::optional<bool> bound_holds;  // minimal_C <= supplied_C
  double mu_used = 0.0;
  std::string weight;
  std::string details;
  cplx sup_point{};
  int grid_depth = 0;
  std::size_t samples = 0;
  std::size_t excluded = 0;
  std::vector<Exclusion> exclusions;
};

CriterionVerdict check_bound(const AnalyticMap& f, const NehariFunction& p, int grid_depth,
                             std::optional<double> C = std::nullopt, const SupOptions& opts = {});
CriterionVerdict check_bound(const HarmonicMap& f, const NehariFunction& p, int grid_depth,
                             std::optional<double> C = std::nullopt, const SupOptions& opts = {});

// C * mu(p) < 2. Throws InputError for C <= 0.
bool classify_finite_valence(double C, const NehariFunction& p);

struct ValenceCount {
  cplx w{};
  double r = 0.0;
  int count = 0;
  double residual = 0.0;  // distance of the contour integral to the nearest integer
  std::size_t contour_points = 0;
};

struct ValenceOptions {
  std::size_t initial_points = 4096;
  std::size_t max_points = std::size_t(1) << 22;
  double tolerance = 1e-3;
};

// Number of solutions of f(z) = w in |z| < r, with multiplicity, from the
// argument principle on |z| = r (trapezoid rule, doubled until stable).
// Throws NumericError when the contour passes too close to a solution.
ValenceCount count_valence(const AnalyticMap& f, cplx w, double r, const ValenceOptions& opts = {});

using PointPair = std::pair<cplx, cplx>;

// Minimum hyperbolic distance over pairs with equal values (to 1e-8). Throws
// InputError for coincident or unequal pairs.
double separation_audit(const AnalyticMap& f, const std::vector<PointPair>& pairs);
// Same for the lift: all three coordinates must agree.
double separation_audit(const HarmonicMap& f, const std::vector<PointPair>& pairs);

}  // namespace schwarz
