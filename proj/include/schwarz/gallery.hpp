#pragma once

#include <string>
#include <vector>

#include "schwarz/analytic_map.hpp"
#include "schwarz/schwarzian.hpp"

namespace schwarz::gallery {

// ((1+z)/(1-z))^(i delta); f(0) = 1, Sf = 2(1+delta^2)/(1-z^2)^2.
AnalyticMap hille(double delta);
// z/(1-z)^2.
AnalyticMap koebe();
// primitive(1/(1-z^2)^t); Sf = 2 p_t on the real diameter.
AnalyticMap nehari_primitive(double t);
// c ((1+z)/(1-z))^(i delta).
AnalyticMap hille_scaled(double delta, double c);
// f = z + conj(1/z) on 0 < |z| < inf: h = z, q = i/z, g = 1/z, lift based at 1.
HarmonicMap catenoid();
// Catenoid precomposed with hille_scaled(delta, c), lift based at 0.
HarmonicMap catenoid_composite(double delta, double c);
// Horizontal shear of the Koebe function with dilatation z^2.
HarmonicMap koebe_shear();

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Case {
  std::string name;
  std::vector<Check> checks;
  std::string error;  // set when the case threw
  double seconds = 0.0;
  bool pass() const;
};

struct Options {
  double delta = 1.0;  // Hille case
  int depth = 12;      // norm grids
};

const std::vector<std::string>& case_names();
// Throws InputError for an unknown name.
Case run_case(const std::string& name, const Options& opts = {});

}  // namespace schwarz::gallery
