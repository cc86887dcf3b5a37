#include "superstar/poisson.hpp"

#include "superstar/errors.hpp"

namespace superstar {

PoissonContext::PoissonContext(SignaturePtr sig) : sig_(std::move(sig)) {
  if (!sig_) throw MathError("null signature");
}

RationalMatrix PoissonContext::omega() const {
  const auto n = static_cast<std::size_t>(sig_->n);
  RationalMatrix m(2 * n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][n + i] = 1;
    m[n + i][i] = -1;
  }
  return m;
}

RationalMatrix PoissonContext::g() const {
  const auto r = static_cast<std::size_t>(sig_->r());
  RationalMatrix m(r, std::vector<Rational>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = sig_->epsilons[i];
  return m;
}

RationalMatrix PoissonContext::h() const {
  const auto even = static_cast<std::size_t>(sig_->even_count());
  const auto dim = static_cast<std::size_t>(sig_->generator_count());
  RationalMatrix m(dim, std::vector<Rational>(dim, 0));
  const auto om = omega();
  for (std::size_t i = 0; i < even; ++i) {
    for (std::size_t j = 0; j < even; ++j) m[i][j] = om[i][j];
  }
  for (std::size_t i = even; i < dim; ++i) m[i][i] = sig_->epsilons[i - even];
  return m;
}

namespace {

SuperPolynomial pure_bracket(const PoissonContext& ctx, const SuperPolynomial& f,
                             const SuperPolynomial& g) {
  const auto& sig = *ctx.signature();
  SuperPolynomial out(ctx.signature());
  if (f.is_zero() || g.is_zero()) return out;
  for (int i = 1; i <= sig.n; ++i) {
    out += partial_derivative(f, p(i)) * partial_derivative(g, q(i));
    out -= partial_derivative(f, q(i)) * partial_derivative(g, p(i));
  }
  const int sign_f = *f.parity() ? -1 : 1;
  for (int i = 1; i <= sig.r(); ++i) {
    auto term = partial_derivative(f, theta(i)) * partial_derivative(g, theta(i));
    out += term * Rational(ctx.epsilon(i) * sign_f);
  }
  return out;
}

}  // namespace

SuperPolynomial poisson_bracket(const PoissonContext& ctx, const SuperPolynomial& f,
                                const SuperPolynomial& g) {
  if (!same_signature(ctx.signature(), f.signature()) ||
      !same_signature(ctx.signature(), g.signature())) {
    throw SignatureMismatch();
  }
  auto [f0, f1] = f.split_by_parity();
  auto [g0, g1] = g.split_by_parity();
  return pure_bracket(ctx, f0, g0) + pure_bracket(ctx, f0, g1) + pure_bracket(ctx, f1, g0) +
         pure_bracket(ctx, f1, g1);
}

std::vector<SuperPolynomial> super_gradient(const PoissonContext& ctx,
                                            const SuperPolynomial& f) {
  if (!same_signature(ctx.signature(), f.signature())) throw SignatureMismatch();
  std::vector<SuperPolynomial> out;
  for (const auto& v : generators(*ctx.signature())) out.push_back(partial_derivative(f, v));
  return out;
}

}  // namespace superstar
