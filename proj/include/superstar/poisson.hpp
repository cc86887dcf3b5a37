#pragma once

#include <vector>

#include "superstar/polynomial.hpp"

namespace superstar {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Constant Poisson structure of the formal super-disk of type (2n|a,b).
//
// Generator brackets: {p_i, q_j} = delta_ij and {theta_i, theta_j} =
// -eps_i delta_ij; everything else vanishes. Equivalently the odd part of the
// bracket is sum_i eps_i (-1)^|f| (d f/d theta_i)(d g/d theta_i) with left
// derivatives.
class PoissonContext {
 public:
  explicit PoissonContext(SignaturePtr sig);

  const SignaturePtr& signature() const { return sig_; }
  int epsilon(int i) const { return sig_->epsilons[static_cast<std::size_t>(i - 1)]; }

  // Omega = [[0, Id], [-Id, 0]] (2n x 2n).
  RationalMatrix omega() const;
  // G = diag(eps).
  RationalMatrix g() const;
  // H_Q = [[Omega, 0], [0, G]].
  RationalMatrix h() const;

 private:
  SignaturePtr sig_;
};

SuperPolynomial poisson_bracket(const PoissonContext& ctx, const SuperPolynomial& f,
                                const SuperPolynomial& g);

// Partials in generator order: p's, q's, thetas.
std::vector<SuperPolynomial> super_gradient(const PoissonContext& ctx, const SuperPolynomial& f);

}  // namespace superstar
