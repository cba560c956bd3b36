#pragma once

#include <functional>

#include "schwarz/error.hpp"

namespace schwarz {

struct QuadratureResult {
  cplx value{};
  double error = 0.0;
  int evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-14;
  int max_intervals = 4000;
};

// Integral of f along the straight segment [a, b], by globally adaptive
// Gauss-Kronrod (7, 15) bisection. Throws NumericError when the requested
// tolerance cannot be met.
QuadratureResult integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b,
                                   const QuadratureOptions& opts = {});

}  // namespace schwarz
