#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superstar/poisson.hpp"
#include "superstar/polynomial.hpp"

namespace superstar {

// A derivation of the formal function algebra, stored by its values on the
// generators (p's, q's, thetas in that order). Acts as
//   v(f) = sum_z v(z) * d f / d z
// with left derivatives for odd z.
class FormalVectorField {
 public:
  // Parity is inferred from the images; nullopt if they mix parities.
  FormalVectorField(SignaturePtr sig, std::vector<SuperPolynomial> images);
  // Validates the images against a declared parity.
  FormalVectorField(SignaturePtr sig, std::vector<SuperPolynomial> images, int parity);

  static FormalVectorField zero(SignaturePtr sig);

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<SuperPolynomial>& images() const { return images_; }
  const SuperPolynomial& image(const Variable& v) const;
  std::optional<int> parity() const { return parity_; }

  SuperPolynomial apply(const SuperPolynomial& f) const;
  // Pure components (even field, odd field).
  std::pair<FormalVectorField, FormalVectorField> split_by_parity() const;

  bool operator==(const FormalVectorField& other) const { return images_ == other.images_; }

 private:
  SignaturePtr sig_;
  std::vector<SuperPolynomial> images_;
  std::optional<int> parity_;
};

FormalVectorField operator+(const FormalVectorField& lhs, const FormalVectorField& rhs);

// [v, w] = v w - (-1)^{|v||w|} w v, evaluated on generators.
FormalVectorField commutator(const FormalVectorField& v, const FormalVectorField& w);

// z -> {h, z}.
FormalVectorField hamiltonian_vf(const PoissonContext& ctx, const SuperPolynomial& h);

// v({x,y}) == {v x, y} + (-1)^{|v||x|} {x, v y} for every sample pair.
// Impure samples or fields are split into pure pieces first.
bool is_poisson_derivation(const PoissonContext& ctx, const FormalVectorField& v,
                           const std::vector<std::pair<SuperPolynomial, SuperPolynomial>>& samples);

struct OriginSplit {
  FormalVectorField vanishing;       // every image has no constant term
  std::vector<Rational> translation;  // constant terms, generator order
};

OriginSplit split_at_origin(const FormalVectorField& v);
FormalVectorField recombine(const OriginSplit& split);

// Polynomial in base variables x = (p, q, theta) and fiber variables
// y = (P, Q, T) of matching parities. `poly` lives on jet_signature(base):
// fiber p_i is p_{n+i}, fiber q_i is q_{n+i}, fiber theta_i is theta_{r+i}.
struct JetElement {
  SignaturePtr base;
  SuperPolynomial poly;

  bool operator==(const JetElement&) const = default;
};

SignaturePtr jet_signature(const Signature& base);
Variable fiber_partner(const Signature& base, const Variable& v);
// Fiber degree of a monomial on the jet signature.
int fiber_degree(const Signature& base, const Monomial& m);

// Base polynomial viewed on the jet signature.
JetElement lift_to_jet(const SuperPolynomial& f);
// f(x + y) truncated at fiber degree `order`.
JetElement taylor_jet(const SuperPolynomial& f, int order);
// Components d/dz - d/dz_hat for every base generator z (generator order).
std::vector<JetElement> jet_flatness_defect(const JetElement& j);
bool is_flat(const JetElement& j);
// Sets every fiber variable to zero.
SuperPolynomial restrict_to_base(const JetElement& j);

}  // namespace superstar
