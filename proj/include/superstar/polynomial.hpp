#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace superstar {

using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Type (2n|a,b) together with the quadratic form Q = (eps_1, ..., eps_r).
// The aux pool holds extra odd generators xi_1..xi_aux that only appear as
// Grassmann coefficients (e.g. in odd blocks of supermatrices).
struct Signature {
  int n = 0;
  int a = 0;
  int b = 0;
  std::vector<int> epsilons;
  int aux = 0;

  // Plus signs first: eps = (+1 x a, -1 x b).
  static Signature standard(int n, int a, int b, int aux = 0);
  static Signature with_epsilons(int n, std::vector<int> epsilons, int aux = 0);

  int r() const { return a + b; }
  int even_count() const { return 2 * n; }
  int odd_count() const { return r() + aux; }
  // Generators of the algebra proper: p's, q's, thetas (no aux pool).
  int generator_count() const { return 2 * n + r(); }

  bool operator==(const Signature&) const = default;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(Signature sig);
bool same_signature(const SignaturePtr& lhs, const SignaturePtr& rhs);

enum class VarKind { kP, kQ, kTheta, kAux };

struct Variable {
  VarKind kind = VarKind::kP;
  int index = 1;  // 1-based

  bool is_odd() const { return kind == VarKind::kTheta || kind == VarKind::kAux; }
  auto operator<=>(const Variable&) const = default;
};

inline Variable p(int i) { return {VarKind::kP, i}; }
inline Variable q(int i) { return {VarKind::kQ, i}; }
inline Variable theta(int i) { return {VarKind::kTheta, i}; }
inline Variable xi(int i) { return {VarKind::kAux, i}; }

bool variable_in_range(const Signature& sig, const Variable& v);
// Position of an even variable in Monomial::even, or of an odd variable as a
// bit of Monomial::odd. Throws MathError when out of range.
int slot_of(const Signature& sig, const Variable& v);
// p_1..p_n, q_1..q_n, theta_1..theta_r.
std::vector<Variable> generators(const Signature& sig);

// c * hbar^k * (even part) * (odd variables in ascending bit order).
struct Monomial {
  std::vector<std::uint16_t> even;
  std::uint64_t odd = 0;
  unsigned hbar = 0;

  static Monomial one(const Signature& sig);

  int degree() const;  // total degree, hbar excluded
  int parity() const;
  bool has_odd_bit(int bit) const { return (odd >> bit) & 1U; }

  bool operator==(const Monomial&) const = default;
  // Printing order: hbar power, then total degree, then lexicographic with
  // earlier variables ranking first.
  std::strong_ordering operator<=>(const Monomial& other) const;
};

// Product of two monomials with the Koszul sign; nullopt when an odd variable
// repeats.
std::optional<std::pair<int, Monomial>> multiply_monomials(const Monomial& lhs,
                                                           const Monomial& rhs);

// Scaled derivative of a monomial: d(m) = factor * mono.
struct MonomialDerivative {
  long factor;
  Monomial mono;
};

// Left derivative for odd variables. `slot` is slot_of(sig, v).
std::optional<MonomialDerivative> differentiate_monomial(const Monomial& m, bool odd,
                                                         int slot);

struct TruncationPolicy {
  std::optional<int> max_degree;
  std::optional<unsigned> max_hbar;

  bool keeps(const Monomial& m) const;
};

class SuperPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit SuperPolynomial(SignaturePtr sig);

  static SuperPolynomial constant(SignaturePtr sig, const Rational& value);
  static SuperPolynomial variable(SignaturePtr sig, const Variable& v);
  static SuperPolynomial hbar(SignaturePtr sig, unsigned power = 1);
  static SuperPolynomial monomial(SignaturePtr sig, Monomial m, const Rational& c);

  const SignaturePtr& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Common parity of all terms; 0 for the zero polynomial, nullopt if mixed.
  std::optional<int> parity() const;
  bool is_pure() const { return parity().has_value(); }
  // (even part, odd part)
  std::pair<SuperPolynomial, SuperPolynomial> split_by_parity() const;

  unsigned max_hbar() const;
  int max_degree() const;
  // Coefficient of hbar^k as a polynomial with no hbar.
  SuperPolynomial hbar_coefficient(unsigned k) const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  SuperPolynomial& operator+=(const SuperPolynomial& other);
  SuperPolynomial& operator-=(const SuperPolynomial& other);
  SuperPolynomial& operator*=(const Rational& scalar);

  friend SuperPolynomial operator+(SuperPolynomial lhs, const SuperPolynomial& rhs) {
    return lhs += rhs;
  }
  friend SuperPolynomial operator-(SuperPolynomial lhs, const SuperPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend SuperPolynomial operator*(SuperPolynomial lhs, const Rational& scalar) {
    return lhs *= scalar;
  }
  friend SuperPolynomial operator*(const Rational& scalar, SuperPolynomial rhs) {
    return rhs *= scalar;
  }
  SuperPolynomial operator-() const;
  // Graded (supercommutative) product.
  friend SuperPolynomial operator*(const SuperPolynomial& lhs, const SuperPolynomial& rhs);

  bool operator==(const SuperPolynomial& other) const;

 private:
  void check_same(const SuperPolynomial& other) const;

  SignaturePtr sig_;
  TermMap terms_;
};

SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g);
SuperPolynomial partial_derivative(const SuperPolynomial& f, const Variable& v);
SuperPolynomial power(const SuperPolynomial& f, unsigned exponent);

// Parity-preserving algebra endomorphism determined by generator images.
// Variables without an image are left fixed.
SuperPolynomial substitute_linear(const SuperPolynomial& f,
                                  const std::map<Variable, SuperPolynomial>& images);

SuperPolynomial truncate(const SuperPolynomial& f, const TruncationPolicy& policy);

bool divisible_by_hbar(const SuperPolynomial& f, unsigned power = 1);
// Exact exponent decrement; MathError if some term lacks the factor.
SuperPolynomial divide_by_hbar(const SuperPolynomial& f, unsigned power = 1);

}  // namespace superstar
