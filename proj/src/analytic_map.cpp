#include "schwarz/analytic_map.hpp"

#include <cmath>

namespace schwarz {

AnalyticMap AnalyticMap::from_expr(ExprAst ast, double domain_radius) {
  if (!(domain_radius > 0.0)) throw InputError("domain radius must be positive");
  AnalyticMap m;
  m.ast_ = std::move(ast);
  m.radius_ = domain_radius;
  return m;
}

AnalyticMap AnalyticMap::parse(std::string_view source, double domain_radius) {
  return from_expr(ExprAst::parse(source), domain_radius);
}

AnalyticMap AnalyticMap::from_function(JetFn fn, double domain_radius, std::string label, JetFn derivatives_fn) {
  if (!fn) throw InputError("analytic map needs an evaluator");
  if (!(domain_radius > 0.0)) throw InputError("domain radius must be positive");
  AnalyticMap m;
  m.fn_ = std::move(fn);
  m.deriv_fn_ = std::move(derivatives_fn);
  m.label_ = std::move(label);
  m.radius_ = domain_radius;
  return m;
}

void AnalyticMap::check_domain(cplx z) const {
  if (!(std::abs(z) < radius_)) {
    throw DomainError("point " + format_complex(z) + " outside the domain |z| < " + std::to_string(radius_) +
                      " of " + describe());
  }
}

Jet3 AnalyticMap::eval_jet(cplx z) const {
  check_domain(z);
  return ast_ ? ast_->eval_jet(z) : fn_(z);
}

Jet3 AnalyticMap::eval_derivatives(cplx z) const {
  check_domain(z);
  if (ast_) return ast_->eval_derivatives(z);
  return deriv_fn_ ? deriv_fn_(z) : fn_(z);
}

AnalyticMap AnalyticMap::with_domain_radius(double r) const {
  if (!(r > 0.0)) throw InputError("domain radius must be positive");
  AnalyticMap m = *this;
  m.radius_ = r;
  return m;
}

std::string AnalyticMap::describe() const { return ast_ ? ast_->print() : label_; }

AnalyticMap AnalyticMap::derivative() const {
  if (!ast_) throw InputError("symbolic derivative unavailable for " + label_);
  return from_expr(ast_->derivative(), radius_);
}

AnalyticMap AnalyticMap::compose(const AnalyticMap& inner) const {
  if (ast_ && inner.ast_ && !ast_->contains_primitive()) {
    return from_expr(ast_->substitute(*inner.ast_), inner.radius_);
  }
  AnalyticMap outer = *this;
  // The outer domain was checked by the caller's construction; composition of
  // disk self-maps stays inside it.
  auto full = [outer, inner](cplx z) {
    const Jet3 in = inner.eval_jet(z);
    return jet_compose(outer.eval_jet(in.f0), in);
  };
  auto derivs = [outer, inner](cplx z) {
    const Jet3 in = inner.eval_jet(z);
    return jet_compose(outer.eval_derivatives(in.f0), in);
  };
  return from_function(full, inner.radius_, describe() + " o " + inner.describe(), derivs);
}

}  // namespace schwarz
