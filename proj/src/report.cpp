#include "schwarz/report.hpp"

#include <cmath>

namespace schwarz {

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v == 0.0 ? 0.0 : v;  // no "-0.0" in reports
}

Json to_json(cplx z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json polar_grid(int depth) { return Json{{"kind", "polar"}, {"depth", depth}}; }

Json to_json(const std::vector<Exclusion>& exclusions) {
  Json out = Json::array();
  for (const auto& e : exclusions) out.push_back(Json{{"z", to_json(e.z)}, {"reason", e.reason}});
  return out;
}

Json to_json(const CriterionVerdict& v) {
  auto opt = [](const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); };
  Json j;
  j["minimal_C"] = number(v.minimal_C);
  j["classical_C"] = number(v.classical_C);
  j["classification"] = to_string(v.classification);
  j["delta"] = opt(v.delta);
  // +inf separation means no two points share a value at any distance.
  if (v.separation_hyperbolic && std::isinf(*v.separation_hyperbolic)) {
    j["separation_hyperbolic"] = "inf";
  } else {
    j["separation_hyperbolic"] = opt(v.separation_hyperbolic);
  }
  j["separation_euclidean"] = opt(v.separation_euclidean);
  j["finite_valence"] = v.finite_valence;
  j["supplied_C"] = opt(v.supplied_C);
  j["bound_holds"] = v.bound_holds ? Json(*v.bound_holds) : Json(nullptr);
  j["mu_used"] = number(v.mu_used);
  j["weight"] = v.weight;
  j["details"] = v.details;
  j["sup_point"] = to_json(v.sup_point);
  j["grid"] = polar_grid(v.grid_depth);
  j["samples"] = v.samples;
  j["excluded"] = v.excluded;
  return j;
}

Json to_json(const ValenceCount& v) {
  return Json{{"w", to_json(v.w)},
              {"r", number(v.r)},
              {"count", v.count},
              {"residual", number(v.residual)},
              {"contour_points", v.contour_points}};
}

Json to_json(const LiftSample& s) {
  return Json{{"z", to_json(s.z)}, {"U", number(s.U)},         {"V", number(s.V)},
              {"W", number(s.W)},  {"sigma", number(s.sigma)}, {"K", number(s.K)}};
}

Json Report::json() const {
  return Json{{"command", command},
              {"inputs", inputs},
              {"results", results},
              {"exclusions", to_json(exclusions)},
              {"version", kVersion}};
}

std::string Report::dump() const { return json().dump(2) + "\n"; }

}  // namespace schwarz
