#pragma once

#include <random>

#include "superstar/polynomial.hpp"
#include "superstar/symplectic_linear.hpp"

namespace superstar {

struct RandomPolynomialSpec {
  int max_degree = 3;
  int max_terms = 4;
  int coefficient_range = 3;  // numerators in [-range, range] \ {0}
  bool include_hbar = false;  // sprinkle hbar^0..2 into terms
};

// Random polynomial in p, q, theta whose terms all have the given parity.
// Returns zero when the signature has no monomial of that parity.
SuperPolynomial random_pure_polynomial(std::mt19937_64& rng, const SignaturePtr& sig,
                                       int parity, const RandomPolynomialSpec& spec = {});
// Mixed parity; includes aux-odd variables when `with_aux` is set.
SuperPolynomial random_polynomial(std::mt19937_64& rng, const SignaturePtr& sig,
                                  const RandomPolynomialSpec& spec = {}, bool with_aux = false);

Rational random_rational(std::mt19937_64& rng, int range, bool nonzero = true);

// Even (block-diagonal, numeric) member of Sp(2n|a,b): products of symmetric
// shears and SL(2,Q) factors on the even block, rational rotations, boosts and
// reflections on the odd block.
SuperMatrix random_sp_member(std::mt19937_64& rng, const SignaturePtr& sig, int factors = 4);
// Even numeric element of the Lie algebra sp(2n) (+) o(a,b).
SuperMatrix random_sp_lie_member(std::mt19937_64& rng, const SignaturePtr& sig);
// Random matrix obeying the parity discipline, with aux-odd Grassmann entries.
SuperMatrix random_parity_matrix(std::mt19937_64& rng, const SignaturePtr& sig);

}  // namespace superstar
