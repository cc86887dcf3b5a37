#pragma once

#include <string>

#include "superstar/expression.hpp"
#include "superstar/polynomial.hpp"

namespace superstar::testing {

inline SignaturePtr sig(int n, int a, int b, int aux = 0) {
  return make_signature(Signature::standard(n, a, b, aux));
}

inline SuperPolynomial poly(const SignaturePtr& s, const std::string& text) {
  return parse_expression(text, s);
}

inline std::string fmt(const SuperPolynomial& f) { return format_expression(f); }

}  // namespace superstar::testing
