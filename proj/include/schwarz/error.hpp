#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace schwarz {

using cplx = std::complex<double>;

// Base for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed flags, violated preconditions, degenerate arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// Evaluation left the domain of a map: pole, branch cut, point outside the disk,
// vanishing derivative where local univalence is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed to converge (quadrature, ODE step underflow).
class NumericError : public Error {
 public:
  using Error::Error;
};

std::string format_complex(cplx z);

}  // namespace schwarz
