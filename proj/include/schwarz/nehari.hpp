#pragma once

#include <memory>
#include <string>
#include <vector>

#include "schwarz/ode.hpp"

namespace schwarz {

enum class NehariKind { Classical, Constant, Linear, Parametric, Custom };

struct NehariCertificate {
  bool positive = false;
  bool nonincreasing = false;   // (1 - x^2)^2 p(x) on [0, 1)
  bool mu_at_most_one = false;
  bool rigidity = false;        // mu ~ 1 forces p ~ (1 - x^2)^-2
  bool nonvanishing = false;    // u'' + p u = 0, u(0) = 1, u'(0) = 0 has no zero before 1 - 1e-6
  double min_u = 0.0;
  std::string failure;

  bool valid() const { return positive && nonincreasing && mu_at_most_one && rigidity && nonvanishing; }
};

/// A Nehari weight p(x): positive, continuous, even, with (1 - x^2)^2 p(x)
/// nonincreasing on [0, 1) and a solution of u'' + p u = 0 that never vanishes
/// on (-1, 1).
///
/// Closed forms: classical (1 - x^2)^-2, constant pi^2/4, linear 2 (1 - x^2)^-1
/// and the one-parameter family t (1 - (t - 1) x^2) / (1 - x^2)^2, 1 < t < 2.
/// Custom weights come from a table of (x, p) pairs; the product
/// (1 - x^2)^2 p is interpolated by a monotone cubic and extended linearly to
/// its extrapolated limit at x = 1.
class NehariFunction {
 public:
  static NehariFunction classical();
  static NehariFunction constant();
  static NehariFunction linear();
  static NehariFunction parametric(double t);
  // Validates the table and the Nehari conditions; throws InputError if rejected.
  static NehariFunction custom(std::vector<double> x, std::vector<double> p);
  static NehariFunction from_csv(const std::string& path);
  // "classical" | "const" | "linear" | "param:<t>" | "file:<path>"
  static NehariFunction from_spec(const std::string& spec);

  double operator()(double x) const;
  // (1 - x^2)^2 p(x), continuous up to x = 1.
  double weighted(double x) const;
  Weight weight(double scale = 1.0) const;

  NehariKind kind() const { return kind_; }
  double t() const { return t_; }
  double mu() const { return mu_; }
  const std::string& mu_method() const { return mu_method_; }
  std::string name() const;

  NehariCertificate validate() const;

 private:
  struct Table;

  NehariKind kind_ = NehariKind::Classical;
  double t_ = 0.0;
  double mu_ = 1.0;
  std::string mu_method_ = "closed form";
  std::shared_ptr<const Table> table_;
};

// lim_{x -> 1-} (1 - x^2)^2 p(x).
double mu_of(const NehariFunction& p);

}  // namespace schwarz
