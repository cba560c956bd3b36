#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "schwarz/expr.hpp"

namespace schwarz {

/// An analytic map evaluable to a Jet3 on the disk |z| < domain_radius.
///
/// Backed either by an expression tree (supports symbolic derivative and
/// substitution) or by a jet-valued callable for maps assembled in code.
/// Values are immutable and cheap to copy.
class AnalyticMap {
 public:
  using JetFn = std::function<Jet3(cplx)>;

  static AnalyticMap from_expr(ExprAst ast, double domain_radius = 1.0);
  static AnalyticMap parse(std::string_view source, double domain_radius = 1.0);
  // `derivatives_fn`, when given, returns f1..f3 without the (possibly
  // expensive) value.
  static AnalyticMap from_function(JetFn fn, double domain_radius, std::string label,
                                   JetFn derivatives_fn = nullptr);

  Jet3 eval_jet(cplx z) const;
  // Jet whose f1..f3 are exact; f0 is unspecified.
  Jet3 eval_derivatives(cplx z) const;
  cplx value(cplx z) const { return eval_jet(z).f0; }

  double domain_radius() const { return radius_; }
  AnalyticMap with_domain_radius(double r) const;
  const ExprAst* expr() const { return ast_ ? &*ast_ : nullptr; }
  std::string describe() const;

  // Symbolic derivative; requires an expression-backed map.
  AnalyticMap derivative() const;
  // this(inner(z)). Substitutes expression trees when possible, otherwise
  // composes jets numerically. Domain is inner's.
  AnalyticMap compose(const AnalyticMap& inner) const;

 private:
  void check_domain(cplx z) const;

  std::optional<ExprAst> ast_;
  JetFn fn_;
  JetFn deriv_fn_;
  std::string label_;
  double radius_ = 1.0;
};

}  // namespace schwarz
