#include "superstar/star_product.hpp"

#include <map>
#include <utility>

#include "superstar/errors.hpp"

namespace superstar {

namespace {

using TensorTerms = std::map<std::pair<Monomial, Monomial>, Rational>;

void accumulate(TensorTerms& terms, Monomial lhs, Monomial rhs, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace({std::move(lhs), std::move(rhs)}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

// One application of the bivector to a sum of pure tensors. The odd
// contraction d/dtheta_i (x) d/dtheta_i passes the right-hand derivation over
// the left factor, which contributes (-1)^{|left|}.
TensorTerms apply_bivector(const Signature& sig, const TensorTerms& in) {
  TensorTerms out;
  const int n = sig.n;
  for (const auto& [pair, c] : in) {
    const auto& [lhs, rhs] = pair;
    for (int i = 0; i < n; ++i) {
      // d/dp_i (x) d/dq_i - d/dq_i (x) d/dp_i
      if (auto dl = differentiate_monomial(lhs, false, i)) {
        if (auto dr = differentiate_monomial(rhs, false, n + i)) {
          accumulate(out, dl->mono, dr->mono, c * (dl->factor * dr->factor));
        }
      }
      if (auto dl = differentiate_monomial(lhs, false, n + i)) {
        if (auto dr = differentiate_monomial(rhs, false, i)) {
          accumulate(out, dl->mono, dr->mono, -c * (dl->factor * dr->factor));
        }
      }
    }
    const long koszul = lhs.parity() ? -1 : 1;
    for (int i = 0; i < sig.r(); ++i) {
      auto dl = differentiate_monomial(lhs, true, i);
      if (!dl) continue;
      auto dr = differentiate_monomial(rhs, true, i);
      if (!dr) continue;
      const long sign = koszul * sig.epsilons[static_cast<std::size_t>(i)];
      accumulate(out, dl->mono, dr->mono, c * (sign * dl->factor * dr->factor));
    }
  }
  return out;
}

void check_signatures(const StarContext& ctx, const SuperPolynomial& f,
                      const SuperPolynomial& g) {
  if (!same_signature(ctx.signature(), f.signature()) ||
      !same_signature(ctx.signature(), g.signature())) {
    throw SignatureMismatch();
  }
}

}  // namespace

SuperPolynomial star(const StarContext& ctx, const SuperPolynomial& f, const SuperPolynomial& g) {
  check_signatures(ctx, f, g);
  const auto& sig = *ctx.signature();
  const auto& cap = ctx.truncation;

  TensorTerms tensor;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) accumulate(tensor, mf, mg, cf * cg);
  }

  SuperPolynomial out(ctx.signature());
  // (1/2)^k / k!
  Rational weight = 1;
  for (unsigned k = 0; !tensor.empty(); ++k) {
    if (cap && cap->max_hbar && k > *cap->max_hbar) break;
    for (const auto& [pair, c] : tensor) {
      auto product = multiply_monomials(pair.first, pair.second);
      if (!product) continue;
      product->second.hbar += k;
      out.add_term(product->second, product->first < 0 ? Rational(-c * weight)
                                                       : Rational(c * weight));
    }
    tensor = apply_bivector(sig, tensor);
    weight /= 2 * (k + 1);
  }
  return cap ? truncate(out, *cap) : out;
}

SuperPolynomial star_commutator(const StarContext& ctx, const SuperPolynomial& f,
                                const SuperPolynomial& g) {
  check_signatures(ctx, f, g);
  auto [f0, f1] = f.split_by_parity();
  auto [g0, g1] = g.split_by_parity();
  SuperPolynomial out = star(ctx, f, g);
  // Only odd-odd pairs pick up the Koszul sign.
  out -= star(ctx, g0, f) + star(ctx, g1, f0);
  out += star(ctx, g1, f1);
  return out;
}

SuperPolynomial classical_limit(const SuperPolynomial& f) {
  return f.hbar_coefficient(0);
}

SuperPolynomial bd1_defect(const StarContext& ctx, const SuperPolynomial& f,
                           const SuperPolynomial& g) {
  return star_commutator(ctx, f, g) -
         SuperPolynomial::hbar(ctx.signature()) * poisson_bracket(ctx.poisson, f, g);
}

SuperPolynomial bd1_bracket(const StarContext& ctx, const SuperPolynomial& f,
                            const SuperPolynomial& g) {
  return divide_by_hbar(star_commutator(ctx, f, g));
}

}  // namespace superstar
