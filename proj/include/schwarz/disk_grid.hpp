#pragma once

#include <functional>
#include <string>
#include <vector>

#include "schwarz/error.hpp"

namespace schwarz {

struct Exclusion {
  cplx z;
  std::string reason;
};

struct SupOptions {
  int radii_per_level = 8;
  int angles = 256;
  bool refine = true;
  std::size_t max_recorded_exclusions = 64;
};

struct SupResult {
  double value = 0.0;
  cplx point{0.0};
  int depth = 0;
  std::size_t samples = 0;
  std::size_t excluded = 0;
  std::vector<Exclusion> exclusions;  // first few only
  std::vector<double> history;        // running maximum after each level
  bool converged = false;             // last three levels agree to relative 1e-3

  double excluded_fraction() const { return samples ? double(excluded) / double(samples) : 0.0; }
};

/// Lower bound for sup of `fn` over |z| <= 1 - 2^-depth.
///
/// Level k samples a polar grid on the dyadic band 1-2^-(k-1) <= |z| <= 1-2^-k,
/// then pattern-searches around the running maximizer. Levels are processed in
/// order, so the result is nondecreasing in `depth`. Points where `fn` throws
/// or returns a non-finite value are recorded as exclusions. A sample replaces
/// the incumbent only if it is larger by more than relative 1e-10 (rounding
/// noise); exactly equal values go to the lexicographically smaller (|z|, arg z).
SupResult disk_sup(const std::function<double(cplx)>& fn, int depth, const SupOptions& opts = {});

// Points of the same level-structured grid, center first, for callers that
// need the raw samples (e.g. bit-exact comparisons between two routes).
std::vector<cplx> disk_grid_points(int depth, const SupOptions& opts = {});

}  // namespace schwarz
