#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "superstar/polynomial.hpp"
#include "superstar/star_product.hpp"

namespace superstar {

// An uninterpreted word in the generators p_i, q_i, theta_i.
struct GeneratorWord {
  std::vector<Variable> letters;
  unsigned hbar = 0;
  Rational coefficient = 1;
};

std::string to_string(const GeneratorWord& word);

// Element of the enveloping algebra of h_{2n} + cl_{a,b} in its PBW basis.
// A monomial p^A q^B theta_S hbar^k of `pbw` stands for the ordered word
// p_1^{A_1}..p_n^{A_n} q_1^{B_1}..q_n^{B_n} theta_{s_1}..theta_{s_m}, s ascending.
struct NormalOrderedElement {
  SuperPolynomial pbw;

  bool operator==(const NormalOrderedElement&) const = default;
};

enum class RewriteStrategy { kLeftmost, kRandom };

// Rewriting rules on adjacent letters x y out of canonical order:
//   q_i p_i          -> p_i q_i - hbar
//   theta_j theta_i  -> -theta_i theta_j     (i < j)
//   theta_i theta_i  -> -(hbar/2) eps_i
//   any other pair   -> y x
// `rng` is only consulted for kRandom.
NormalOrderedElement normal_order(const SignaturePtr& sig, const GeneratorWord& word,
                                  RewriteStrategy strategy = RewriteStrategy::kLeftmost,
                                  std::mt19937_64* rng = nullptr);

NormalOrderedElement rewrite_mul(const NormalOrderedElement& x, const NormalOrderedElement& y);

// Identification with the star-product algebra: the PBW word maps to the
// star product of its letters in order. Per index pair this is the closed form
//   p^a * q^b = sum_k (hbar/2)^k / k! a!/(a-k)! b!/(b-k)! p^{a-k} q^{b-k}.
SuperPolynomial to_star_basis(const NormalOrderedElement& x);
// Inverse of to_star_basis (the map is unitriangular in degree).
NormalOrderedElement from_star_basis(const SuperPolynomial& f);

struct IsoMismatch {
  GeneratorWord word;
  SuperPolynomial rewriting;
  SuperPolynomial star;
};

struct IsoReport {
  std::size_t checked = 0;
  std::vector<IsoMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Every word over p, q, theta of length <= max_length (including the empty word).
std::vector<GeneratorWord> all_words(const Signature& sig, std::size_t max_length);

// Compares the rewriting pipeline against g1 * (g2 * (... * gk)).
IsoReport iso_check(const StarContext& ctx, const std::vector<GeneratorWord>& words);

}  // namespace superstar
