#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "superstar/polynomial.hpp"

namespace superstar {

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor | '/' NAT)*
//   factor := atom ('^' NAT)?
//   atom   := RATIONAL | 'h' | VAR | '(' expr ')' | '-' atom
//   RATIONAL := INT ('/' NAT)?      VAR := ('p'|'q'|'t'|'x') NAT
// Whitespace is insignificant. Note that '^' binds to the atom, so "-p1^2"
// is (-p1)^2. Division is only by a positive integer literal ("h/2").
struct Expression {
  struct Number { Rational value; };
  struct Hbar {};
  struct Var { Variable var; std::size_t position; };
  struct Neg { std::unique_ptr<Expression> operand; };
  struct Binary {
    char op;  // '+', '-', '*', '/' (rhs is a Number)
    std::unique_ptr<Expression> lhs;
    std::unique_ptr<Expression> rhs;
  };
  struct Power {
    std::unique_ptr<Expression> base;
    unsigned exponent;
  };

  std::variant<Number, Hbar, Var, Neg, Binary, Power> node;
};

// Syntax only; variables are not checked against a signature.
Expression parse_syntax(std::string_view text);

struct ParseResult {
  SuperPolynomial value;
  std::vector<std::string> warnings;
};

// Throws ParseError on syntax errors and unknown variables. An odd variable
// raised to a power >= 2 is accepted (it evaluates to 0) with a warning.
ParseResult parse_expression_with_warnings(std::string_view text, const SignaturePtr& sig);
SuperPolynomial parse_expression(std::string_view text, const SignaturePtr& sig);

// Overrides the printed name of a variable (used for jet fiber variables).
using VariableNamer = std::function<std::string(const Variable&)>;

std::string variable_name(const Variable& v);
// Canonical text: terms in Monomial order joined by " + " / " - ",
// coefficient 1 omitted on positive terms, variables in generator order
// followed by h.
std::string format_expression(const SuperPolynomial& f, const VariableNamer& namer = {});

}  // namespace superstar
