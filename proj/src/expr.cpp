#include "schwarz/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

namespace schwarz {

namespace {

using Kind = ExprNode::Kind;

const char* func_name(Func f) {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sqrt: return "sqrt";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Primitive: return "primitive";
  }
  return "?";
}

char op_char(BinOp op) {
  switch (op) {
    case BinOp::Add: return '+';
    case BinOp::Sub: return '-';
    case BinOp::Mul: return '*';
    case BinOp::Div: return '/';
    case BinOp::Pow: return '^';
  }
  return '?';
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += "'" + items[i] + "'";
  }
  return out;
}

const std::vector<std::string> kAtomStart = {"z", "number", "exp", "log", "sqrt", "sin", "cos", "primitive", "(", "-"};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse_all() {
    for (std::size_t i = 0; i < src_.size(); ++i) {
      if (static_cast<unsigned char>(src_[i]) > 127) {
        throw ParseError(i, {}, "non-ASCII byte in expression");
      }
    }
    skip_ws();
    if (pos_ >= src_.size()) fail(kAtomStart, "empty expression");
    ExprPtr e = expr();
    skip_ws();
    if (pos_ < src_.size()) fail({"+", "-", "*", "/", "^", "end of input"}, "unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
    std::ostringstream msg;
    msg << "syntax error at byte " << pos_ << ": " << what;
    if (!expected.empty()) msg << "; expected one of " << join(expected);
    throw ParseError(pos_, std::move(expected), msg.str());
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = ex::add(lhs, term());
      } else if (accept('-')) {
        lhs = ex::sub(lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (true) {
      if (accept('*')) {
        lhs = ex::mul(lhs, factor());
      } else if (accept('/')) {
        lhs = ex::div(lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    ExprPtr base = unary();
    if (accept('^')) return ex::pow(base, factor());
    return base;
  }

  ExprPtr unary() {
    if (accept('-')) {
      ExprPtr a = atom();
      if (a->kind == Kind::Lit) return ex::lit(-a->value);
      return ex::neg(a);
    }
    return atom();
  }

  // Scans a number at pos_ without consuming; returns its length or 0.
  std::size_t scan_number(std::size_t at) const {
    std::size_t i = at;
    std::size_t digits = 0;
    while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i, ++digits;
    if (i < src_.size() && src_[i] == '.') {
      ++i;
      while (i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]))) ++i, ++digits;
    }
    if (digits == 0) return 0;
    if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
      std::size_t exp_digits = 0;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j, ++exp_digits;
      if (exp_digits > 0) i = j;
    }
    return i - at;
  }

  double to_double(std::size_t at, std::size_t len) const {
    double v = 0.0;
    std::string text(src_.substr(at, len));
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError(at, {"number"}, "malformed number '" + text + "'");
    }
    return v;
  }

  // Matches `( -? number (+|-) number i )` starting at the '(' and returns the
  // folded literal, leaving pos_ after ')'. Restores pos_ on mismatch.
  std::optional<cplx> try_complex_literal() {
    const std::size_t saved = pos_;
    auto restore = [&] {
      pos_ = saved;
      return std::nullopt;
    };
    ++pos_;  // '('
    skip_ws();
    double sign_re = 1.0;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      sign_re = -1.0;
      ++pos_;
      skip_ws();
    }
    std::size_t n1 = scan_number(pos_);
    if (n1 == 0) return restore();
    const double re = sign_re * to_double(pos_, n1);
    pos_ += n1;
    if (pos_ < src_.size() && src_[pos_] == 'i') return restore();
    skip_ws();
    if (pos_ >= src_.size() || (src_[pos_] != '+' && src_[pos_] != '-')) return restore();
    const double sign_im = src_[pos_] == '-' ? -1.0 : 1.0;
    ++pos_;
    skip_ws();
    std::size_t n2 = scan_number(pos_);
    if (n2 == 0) return restore();
    const double im = sign_im * to_double(pos_, n2);
    pos_ += n2;
    if (pos_ >= src_.size() || src_[pos_] != 'i') return restore();
    ++pos_;
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != ')') return restore();
    ++pos_;
    return cplx(re, im);
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail(kAtomStart, "unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      if (auto lit = try_complex_literal()) return ex::lit(*lit);
      ++pos_;
      ExprPtr inner = expr();
      if (!accept(')')) fail({")", "+", "-", "*", "/", "^"}, "unbalanced parenthesis");
      return inner;
    }
    if (const std::size_t n = scan_number(pos_); n > 0) {
      const double v = to_double(pos_, n);
      pos_ += n;
      if (pos_ < src_.size() && src_[pos_] == 'i') {
        ++pos_;
        return ex::lit(cplx(0.0, v));
      }
      return ex::lit(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string_view word = src_.substr(start, pos_ - start);
      if (word == "z") return ex::var();
      std::optional<Func> f;
      for (Func cand : {Func::Exp, Func::Log, Func::Sqrt, Func::Sin, Func::Cos, Func::Primitive}) {
        if (word == func_name(cand)) f = cand;
      }
      if (!f) {
        pos_ = start;
        fail(kAtomStart, "unknown name '" + std::string(word) + "'");
      }
      if (*f == Func::Primitive && in_primitive_) {
        pos_ = start;
        fail({"z", "number", "exp", "log", "sqrt", "sin", "cos", "(", "-"}, "nested primitive");
      }
      if (!accept('(')) fail({"("}, "expected '(' after function name");
      const bool outer = in_primitive_;
      if (*f == Func::Primitive) in_primitive_ = true;
      ExprPtr arg = expr();
      in_primitive_ = outer;
      if (!accept(')')) fail({")", "+", "-", "*", "/", "^"}, "unbalanced parenthesis");
      return ex::call(*f, arg);
    }
    fail(kAtomStart, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  bool in_primitive_ = false;
};

std::string number_text(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string print_lit(cplx v) {
  if (v.imag() == 0.0) return number_text(v.real());
  if (v.real() == 0.0) return number_text(v.imag()) + "i";
  std::string out = "(" + number_text(v.real());
  out += v.imag() < 0 ? "-" : "+";
  out += number_text(std::abs(v.imag())) + "i)";
  return out;
}

void print_node(const ExprNode& n, std::string& out) {
  switch (n.kind) {
    case Kind::Var:
      out += "z";
      return;
    case Kind::Lit:
      out += print_lit(n.value);
      return;
    case Kind::Neg:
      out += "-(";
      print_node(*n.lhs, out);
      out += ")";
      return;
    case Kind::Binary: {
      out += "(";
      print_node(*n.lhs, out);
      out += op_char(n.op);
      // `(1+2i)` would re-read as one complex literal.
      const bool guard = n.lhs->kind == Kind::Lit && n.rhs->kind == Kind::Lit &&
                         (n.op == BinOp::Add || n.op == BinOp::Sub);
      if (guard) out += "(";
      print_node(*n.rhs, out);
      if (guard) out += ")";
      out += ")";
      return;
    }
    case Kind::Call:
      out += func_name(n.func);
      out += "(";
      print_node(*n.lhs, out);
      out += ")";
      return;
  }
}

bool has_primitive(const ExprPtr& n) {
  if (!n) return false;
  if (n->kind == Kind::Call && n->func == Func::Primitive) return true;
  return has_primitive(n->lhs) || has_primitive(n->rhs);
}

bool has_var(const ExprPtr& n) {
  if (!n) return false;
  if (n->kind == Kind::Var) return true;
  return has_var(n->lhs) || has_var(n->rhs);
}

struct Evaluator {
  cplx z;
  const QuadratureOptions& quad;

  // `linear`: the node's value enters the root only through additive constants,
  // so its f0 may be left unspecified without affecting f1..f3.
  Jet3 eval(const ExprNode& n, bool linear) const {
    switch (n.kind) {
      case Kind::Var:
        return Jet3::variable(z);
      case Kind::Lit:
        return Jet3::constant(n.value);
      case Kind::Neg:
        return jet_neg(eval(*n.lhs, linear));
      case Kind::Binary:
        return eval_binary(n, linear);
      case Kind::Call:
        return eval_call(n, linear);
    }
    return {};
  }

  Jet3 eval_binary(const ExprNode& n, bool linear) const {
    switch (n.op) {
      case BinOp::Add:
        return jet_add(eval(*n.lhs, linear), eval(*n.rhs, linear));
      case BinOp::Sub:
        return jet_sub(eval(*n.lhs, linear), eval(*n.rhs, linear));
      case BinOp::Mul: {
        const bool lconst = !has_var(n.lhs), rconst = !has_var(n.rhs);
        return jet_mul(eval(*n.lhs, linear && rconst), eval(*n.rhs, linear && lconst));
      }
      case BinOp::Div: {
        const bool rconst = !has_var(n.rhs);
        return jet_div(eval(*n.lhs, linear && rconst), eval(*n.rhs, false));
      }
      case BinOp::Pow:
        return jet_pow(eval(*n.lhs, false), eval(*n.rhs, false));
    }
    return {};
  }

  Jet3 eval_call(const ExprNode& n, bool linear) const {
    if (n.func == Func::Primitive) {
      const Jet3 integrand = eval(*n.lhs, false);
      cplx value = 0.0;
      if (!linear) {
        const ExprNode& body = *n.lhs;
        auto f = [&](cplx s) {
          Evaluator inner{s, quad};
          return inner.eval(body, false).f0;
        };
        value = integrate_segment(f, 0.0, z, quad).value;
      }
      return {value, integrand.f0, integrand.f1, integrand.f2};
    }
    const Jet3 a = eval(*n.lhs, false);
    switch (n.func) {
      case Func::Exp: return jet_exp(a);
      case Func::Log: return jet_log(a);
      case Func::Sqrt: return jet_sqrt(a);
      case Func::Sin: return jet_sin(a);
      case Func::Cos: return jet_cos(a);
      case Func::Primitive: break;
    }
    return {};
  }
};

// Simplifying constructors for the symbolic derivative.
bool is_lit(const ExprPtr& n, cplx v) { return n->kind == Kind::Lit && n->value == v; }

ExprPtr s_add(ExprPtr a, ExprPtr b) {
  if (is_lit(a, 0.0)) return b;
  if (is_lit(b, 0.0)) return a;
  if (a->kind == Kind::Lit && b->kind == Kind::Lit) return ex::lit(a->value + b->value);
  return ex::add(a, b);
}

ExprPtr s_neg(ExprPtr a) {
  if (a->kind == Kind::Lit) return ex::lit(-a->value);
  if (a->kind == Kind::Neg) return a->lhs;
  return ex::neg(a);
}

ExprPtr s_sub(ExprPtr a, ExprPtr b) {
  if (is_lit(b, 0.0)) return a;
  if (is_lit(a, 0.0)) return s_neg(b);
  if (a->kind == Kind::Lit && b->kind == Kind::Lit) return ex::lit(a->value - b->value);
  return ex::sub(a, b);
}

ExprPtr s_mul(ExprPtr a, ExprPtr b) {
  if (is_lit(a, 0.0) || is_lit(b, 0.0)) return ex::lit(0.0);
  if (is_lit(a, 1.0)) return b;
  if (is_lit(b, 1.0)) return a;
  if (a->kind == Kind::Lit && b->kind == Kind::Lit) return ex::lit(a->value * b->value);
  return ex::mul(a, b);
}

ExprPtr s_div(ExprPtr a, ExprPtr b) {
  if (is_lit(a, 0.0)) return ex::lit(0.0);
  if (is_lit(b, 1.0)) return a;
  return ex::div(a, b);
}

ExprPtr s_pow(ExprPtr a, ExprPtr b) {
  if (is_lit(b, 1.0)) return a;
  if (is_lit(b, 0.0)) return ex::lit(1.0);
  return ex::pow(a, b);
}

ExprPtr differentiate(const ExprPtr& n) {
  switch (n->kind) {
    case Kind::Var:
      return ex::lit(1.0);
    case Kind::Lit:
      return ex::lit(0.0);
    case Kind::Neg:
      return s_neg(differentiate(n->lhs));
    case Kind::Binary: {
      const ExprPtr& a = n->lhs;
      const ExprPtr& b = n->rhs;
      switch (n->op) {
        case BinOp::Add: return s_add(differentiate(a), differentiate(b));
        case BinOp::Sub: return s_sub(differentiate(a), differentiate(b));
        case BinOp::Mul: return s_add(s_mul(differentiate(a), b), s_mul(a, differentiate(b)));
        case BinOp::Div:
          return s_div(s_sub(s_mul(differentiate(a), b), s_mul(a, differentiate(b))), s_pow(b, ex::lit(2.0)));
        case BinOp::Pow:
          if (!has_var(b)) {
            const ExprPtr lowered = b->kind == Kind::Lit ? ex::lit(b->value - 1.0) : s_sub(b, ex::lit(1.0));
            return s_mul(s_mul(b, s_pow(a, lowered)), differentiate(a));
          }
          return s_mul(n, s_add(s_mul(differentiate(b), ex::call(Func::Log, a)),
                                s_div(s_mul(b, differentiate(a)), a)));
      }
      break;
    }
    case Kind::Call: {
      const ExprPtr& a = n->lhs;
      if (n->func == Func::Primitive) return a;
      const ExprPtr da = differentiate(a);
      switch (n->func) {
        case Func::Exp: return s_mul(n, da);
        case Func::Log: return s_div(da, a);
        case Func::Sqrt: return s_div(da, s_mul(ex::lit(2.0), n));
        case Func::Sin: return s_mul(ex::call(Func::Cos, a), da);
        case Func::Cos: return s_neg(s_mul(ex::call(Func::Sin, a), da));
        case Func::Primitive: break;
      }
      break;
    }
  }
  return ex::lit(0.0);
}

ExprPtr substitute_var(const ExprPtr& n, const ExprPtr& inner) {
  switch (n->kind) {
    case Kind::Var:
      return inner;
    case Kind::Lit:
      return n;
    case Kind::Neg:
      return ex::neg(substitute_var(n->lhs, inner));
    case Kind::Binary: {
      auto node = std::make_shared<ExprNode>(*n);
      node->lhs = substitute_var(n->lhs, inner);
      node->rhs = substitute_var(n->rhs, inner);
      return node;
    }
    case Kind::Call:
      return ex::call(n->func, substitute_var(n->lhs, inner));
  }
  return n;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& msg)
    : InputError(msg), offset_(offset), expected_(std::move(expected)) {}

namespace ex {

ExprPtr var() {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Var;
  return n;
}

ExprPtr lit(cplx v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Lit;
  n->value = v;
  return n;
}

ExprPtr neg(ExprPtr a) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Neg;
  n->lhs = std::move(a);
  return n;
}

namespace {
ExprPtr binary(BinOp op, ExprPtr a, ExprPtr b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Binary;
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}
}  // namespace

ExprPtr add(ExprPtr a, ExprPtr b) { return binary(BinOp::Add, std::move(a), std::move(b)); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return binary(BinOp::Sub, std::move(a), std::move(b)); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return binary(BinOp::Mul, std::move(a), std::move(b)); }
ExprPtr div(ExprPtr a, ExprPtr b) { return binary(BinOp::Div, std::move(a), std::move(b)); }
ExprPtr pow(ExprPtr a, ExprPtr b) { return binary(BinOp::Pow, std::move(a), std::move(b)); }

ExprPtr call(Func f, ExprPtr a) {
  auto n = std::make_shared<ExprNode>();
  n->kind = Kind::Call;
  n->func = f;
  n->lhs = std::move(a);
  return n;
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Var: return true;
    case Kind::Lit: return a->value == b->value;
    case Kind::Neg: return equal(a->lhs, b->lhs);
    case Kind::Binary: return a->op == b->op && equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case Kind::Call: return a->func == b->func && equal(a->lhs, b->lhs);
  }
  return false;
}

}  // namespace ex

ExprAst::ExprAst(ExprPtr root) : root_(std::move(root)) {
  if (!root_) throw InputError("empty expression tree");
}

ExprAst ExprAst::parse(std::string_view source) { return ExprAst(Parser(source).parse_all()); }

std::string ExprAst::print() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

bool ExprAst::contains_primitive() const { return has_primitive(root_); }
bool ExprAst::depends_on_z() const { return has_var(root_); }

Jet3 ExprAst::eval_jet(cplx z, const QuadratureOptions& quad) const {
  try {
    return Evaluator{z, quad}.eval(*root_, false);
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " (at z = " + format_complex(z) + ")");
  }
}

Jet3 ExprAst::eval_derivatives(cplx z, const QuadratureOptions& quad) const {
  try {
    return Evaluator{z, quad}.eval(*root_, true);
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " (at z = " + format_complex(z) + ")");
  }
}

ExprAst ExprAst::derivative() const { return ExprAst(differentiate(root_)); }

ExprAst ExprAst::substitute(const ExprAst& inner) const {
  if (contains_primitive()) {
    throw InputError("cannot substitute into an expression containing primitive(); compose numerically instead");
  }
  return ExprAst(substitute_var(root_, inner.root_));
}

bool operator==(const ExprAst& a, const ExprAst& b) { return ex::equal(a.root_, b.root_); }

}  // namespace schwarz
