#pragma once

#include <optional>

#include "superstar/poisson.hpp"
#include "superstar/polynomial.hpp"

namespace superstar {

// Moyal-Weyl-Clifford deformation: f * g = m(exp((hbar/2) alpha)(f (x) g)).
struct StarContext {
  PoissonContext poisson;
  std::optional<TruncationPolicy> truncation;

  explicit StarContext(SignaturePtr sig, std::optional<TruncationPolicy> trunc = std::nullopt)
      : poisson(std::move(sig)), truncation(trunc) {}
  explicit StarContext(PoissonContext ctx, std::optional<TruncationPolicy> trunc = std::nullopt)
      : poisson(std::move(ctx)), truncation(trunc) {}

  const SignaturePtr& signature() const { return poisson.signature(); }
};

SuperPolynomial star(const StarContext& ctx, const SuperPolynomial& f, const SuperPolynomial& g);

// Graded commutator f*g - (-1)^{|f||g|} g*f; impure inputs are split by parity.
SuperPolynomial star_commutator(const StarContext& ctx, const SuperPolynomial& f,
                                const SuperPolynomial& g);

// Drops every term carrying hbar.
SuperPolynomial classical_limit(const SuperPolynomial& f);

// [f, g] - hbar {f, g}; always divisible by hbar^2.
SuperPolynomial bd1_defect(const StarContext& ctx, const SuperPolynomial& f,
                           const SuperPolynomial& g);

// [f, g] / hbar.
SuperPolynomial bd1_bracket(const StarContext& ctx, const SuperPolynomial& f,
                            const SuperPolynomial& g);

}  // namespace superstar
