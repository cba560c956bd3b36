#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "schwarz/criteria.hpp"
#include "schwarz/disk_grid.hpp"
#include "schwarz/surface.hpp"

namespace schwarz {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

inline constexpr const char* kVersion = "1.0.0";

Json to_json(cplx z);
// Non-finite doubles become null.
Json number(double v);
Json polar_grid(int depth);
Json to_json(const std::vector<Exclusion>& exclusions);
Json to_json(const CriterionVerdict& v);
Json to_json(const ValenceCount& v);
Json to_json(const LiftSample& s);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Exclusion> exclusions;

  Json json() const;
  // Two-space indented with a trailing newline.
  std::string dump() const;
};

}  // namespace schwarz
