#include "superstar/expression.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "superstar/errors.hpp"

namespace superstar {

namespace {

constexpr unsigned kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expression parse_expr() {
    Expression lhs = parse_term();
    for (;;) {
      char op = 0;
      if (accept('+')) {
        op = '+';
      } else if (accept('-')) {
        op = '-';
      } else {
        return lhs;
      }
      Expression rhs = parse_term();
      lhs = binary(op, std::move(lhs), std::move(rhs));
    }
  }

  Expression parse_term() {
    Expression lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        lhs = binary('*', std::move(lhs), parse_factor());
      } else if (accept('/')) {
        // Division only by a positive integer literal, as in "h/2".
        skip_space();
        const std::size_t at = pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected an integer divisor");
        Rational value;
        value.get_num() = mpz_class(den);
        if (value == 0) {
          pos_ = at;
          fail("division by zero");
        }
        lhs = binary('/', std::move(lhs), Expression{Expression::Number{value}});
      } else {
        return lhs;
      }
    }
  }

  Expression parse_factor() {
    Expression base = parse_atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const std::string exp = digits();
    if (exp.empty()) fail("expected a nonnegative integer exponent");
    if (exp.size() > 4 || std::stoul(exp) > kMaxExponent) {
      pos_ = at;
      fail("exponent too large");
    }
    return Expression{Expression::Power{std::make_unique<Expression>(std::move(base)),
                                        static_cast<unsigned>(std::stoul(exp))}};
  }

  Expression parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return Expression{Expression::Neg{std::make_unique<Expression>(parse_atom())}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (c == 'h') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        fail("unknown identifier");
      }
      return Expression{Expression::Hbar{}};
    }
    if (c == 'p' || c == 'q' || c == 't' || c == 'x') {
      const std::size_t start = pos_++;
      const std::string index = digits();
      if (index.empty() || index.size() > 6) {
        pos_ = start;
        fail("malformed variable name");
      }
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        fail("unknown identifier");
      }
      const int i = std::stoi(index);
      VarKind kind = c == 'p' ? VarKind::kP
                     : c == 'q' ? VarKind::kQ
                     : c == 't' ? VarKind::kTheta
                                : VarKind::kAux;
      return Expression{Expression::Var{{kind, i}, start}};
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Expression parse_rational() {
    const std::string num = digits();
    std::string den = "1";
    // A '/' directly after digits is part of the literal.
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = digits();
      if (den.empty()) fail("expected a denominator");
    }
    Rational value;
    value.get_num() = mpz_class(num);
    value.get_den() = mpz_class(den);
    if (value.get_den() == 0) fail("zero denominator");
    value.canonicalize();
    return Expression{Expression::Number{value}};
  }

  static Expression binary(char op, Expression lhs, Expression rhs) {
    return Expression{Expression::Binary{op, std::make_unique<Expression>(std::move(lhs)),
                                         std::make_unique<Expression>(std::move(rhs))}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Lowering {
  const SignaturePtr& sig;
  std::vector<std::string>& warnings;

  SuperPolynomial operator()(const Expression& e) const {
    return std::visit([this](const auto& node) { return lower(node); }, e.node);
  }

  SuperPolynomial lower(const Expression::Number& n) const {
    return SuperPolynomial::constant(sig, n.value);
  }
  SuperPolynomial lower(const Expression::Hbar&) const { return SuperPolynomial::hbar(sig); }
  SuperPolynomial lower(const Expression::Var& v) const {
    if (!variable_in_range(*sig, v.var)) {
      throw ParseError("unknown variable " + variable_name(v.var), v.position);
    }
    return SuperPolynomial::variable(sig, v.var);
  }
  SuperPolynomial lower(const Expression::Neg& n) const { return -(*this)(*n.operand); }
  SuperPolynomial lower(const Expression::Binary& b) const {
    auto lhs = (*this)(*b.lhs);
    auto rhs = (*this)(*b.rhs);
    switch (b.op) {
      case '+': return lhs + rhs;
      case '-': return lhs - rhs;
      case '/': return lhs * (1 / rhs.coefficient(Monomial::one(*sig)));
      default: return lhs * rhs;
    }
  }
  SuperPolynomial lower(const Expression::Power& pw) const {
    if (const auto* var = std::get_if<Expression::Var>(&pw.base->node)) {
      if (var->var.is_odd() && pw.exponent >= 2) {
        warnings.push_back("odd variable " + variable_name(var->var) + " raised to power " +
                           std::to_string(pw.exponent) + " is zero");
      }
    }
    return power((*this)(*pw.base), pw.exponent);
  }
};

}  // namespace

Expression parse_syntax(std::string_view text) { return Parser(text).parse(); }

ParseResult parse_expression_with_warnings(std::string_view text, const SignaturePtr& sig) {
  const Expression ast = parse_syntax(text);
  std::vector<std::string> warnings;
  SuperPolynomial value = Lowering{sig, warnings}(ast);
  return {std::move(value), std::move(warnings)};
}

SuperPolynomial parse_expression(std::string_view text, const SignaturePtr& sig) {
  return parse_expression_with_warnings(text, sig).value;
}

std::string variable_name(const Variable& v) {
  const char prefix = v.kind == VarKind::kP       ? 'p'
                      : v.kind == VarKind::kQ     ? 'q'
                      : v.kind == VarKind::kTheta ? 't'
                                                  : 'x';
  return prefix + std::to_string(v.index);
}

std::string format_expression(const SuperPolynomial& f, const VariableNamer& namer) {
  if (f.is_zero()) return "0";
  const auto& sig = *f.signature();
  auto name = [&](const Variable& v) { return namer ? namer(v) : variable_name(v); };

  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::string> factors;
    for (std::size_t slot = 0; slot < m.even.size(); ++slot) {
      if (m.even[slot] == 0) continue;
      const int i = static_cast<int>(slot);
      const Variable v = i < sig.n ? p(i + 1) : q(i - sig.n + 1);
      factors.push_back(name(v) + (m.even[slot] > 1 ? "^" + std::to_string(m.even[slot]) : ""));
    }
    for (std::uint64_t rest = m.odd; rest != 0; rest &= rest - 1) {
      const int bit = std::countr_zero(rest);
      factors.push_back(name(bit < sig.r() ? theta(bit + 1) : xi(bit - sig.r() + 1)));
    }
    if (m.hbar > 0) factors.push_back(m.hbar > 1 ? "h^" + std::to_string(m.hbar) : "h");

    std::string body;
    for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];

    const Rational magnitude = abs(c);
    std::string term;
    if (first) {
      if (body.empty()) {
        term = c.get_str();
      } else {
        term = c == 1 ? body : c.get_str() + "*" + body;
      }
      os << term;
      first = false;
      continue;
    }
    if (body.empty()) {
      term = magnitude.get_str();
    } else {
      term = magnitude == 1 ? body : magnitude.get_str() + "*" + body;
    }
    os << (sgn(c) < 0 ? " - " : " + ") << term;
  }
  return os.str();
}

}  // namespace superstar
