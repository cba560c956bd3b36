#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "schwarz/jet.hpp"
#include "schwarz/quadrature.hpp"

namespace schwarz {

enum class BinOp { Add, Sub, Mul, Div, Pow };
enum class Func { Exp, Log, Sqrt, Sin, Cos, Primitive };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// Immutable expression tree in the single variable z. Subtrees are shared.
struct ExprNode {
  enum class Kind { Var, Lit, Neg, Binary, Call };
  Kind kind = Kind::Var;
  cplx value{};            // Lit
  BinOp op = BinOp::Add;   // Binary
  Func func = Func::Exp;   // Call
  ExprPtr lhs;             // Neg, Binary, Call argument
  ExprPtr rhs;             // Binary
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Expression grammar (whitespace insignificant):
///
///     expr   := term (('+'|'-') term)*
///     term   := factor (('*'|'/') factor)*
///     factor := unary ('^' factor)?
///     unary  := '-'? atom
///     atom   := 'z' | number 'i'? | func '(' expr ')' | '(' expr ')'
///     func   := 'exp'|'log'|'sqrt'|'sin'|'cos'|'primitive'
///
/// A parenthesised `(a+bi)` / `(a-bi)` with numeric a, b is read as one complex
/// literal, and a negated literal folds into the literal. `primitive(e)` is
/// z -> integral of e over the segment [0, z]; primitives may not nest.
class ExprAst {
 public:
  explicit ExprAst(ExprPtr root);

  static ExprAst parse(std::string_view source);

  const ExprNode& root() const { return *root_; }
  const ExprPtr& ptr() const { return root_; }

  // Fully parenthesised text that parses back to an equal tree.
  std::string print() const;
  bool contains_primitive() const;
  bool depends_on_z() const;

  Jet3 eval_jet(cplx z, const QuadratureOptions& quad = {}) const;
  // f1..f3 are exact; f0 is only meaningful when the tree has no primitive.
  // Skips the quadrature for primitives that enter linearly.
  Jet3 eval_derivatives(cplx z, const QuadratureOptions& quad = {}) const;

  // Symbolic d/dz, lightly simplified.
  ExprAst derivative() const;
  // this(inner(z)); throws InputError if this tree contains a primitive.
  ExprAst substitute(const ExprAst& inner) const;

  friend bool operator==(const ExprAst& a, const ExprAst& b);

 private:
  ExprPtr root_;
};

namespace ex {
ExprPtr var();
ExprPtr lit(cplx v);
ExprPtr neg(ExprPtr a);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr pow(ExprPtr a, ExprPtr b);
ExprPtr call(Func f, ExprPtr a);
bool equal(const ExprPtr& a, const ExprPtr& b);
}  // namespace ex

}  // namespace schwarz
