#include "superstar/polynomial.hpp"

#include <bit>
#include <string>

#include "superstar/errors.hpp"

namespace superstar {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw MathError("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Signature

Signature Signature::standard(int n, int a, int b, int aux) {
  std::vector<int> eps(static_cast<std::size_t>(a), 1);
  eps.insert(eps.end(), static_cast<std::size_t>(b), -1);
  return with_epsilons(n, std::move(eps), aux);
}

Signature Signature::with_epsilons(int n, std::vector<int> epsilons, int aux) {
  if (n < 0 || aux < 0) throw MathError("signature counts must be nonnegative");
  Signature sig;
  sig.n = n;
  sig.aux = aux;
  for (int e : epsilons) {
    if (e == 1) {
      ++sig.a;
    } else if (e == -1) {
      ++sig.b;
    } else {
      throw MathError("epsilons must be +1 or -1");
    }
  }
  sig.epsilons = std::move(epsilons);
  if (sig.odd_count() > 64) throw MathError("at most 64 odd variables are supported");
  if (sig.n > 64) throw MathError("at most 64 (p,q) pairs are supported");
  return sig;
}

SignaturePtr make_signature(Signature sig) {
  return std::make_shared<const Signature>(std::move(sig));
}

bool same_signature(const SignaturePtr& lhs, const SignaturePtr& rhs) {
  return lhs == rhs || (lhs && rhs && *lhs == *rhs);
}

bool variable_in_range(const Signature& sig, const Variable& v) {
  if (v.index < 1) return false;
  switch (v.kind) {
    case VarKind::kP:
    case VarKind::kQ:
      return v.index <= sig.n;
    case VarKind::kTheta:
      return v.index <= sig.r();
    case VarKind::kAux:
      return v.index <= sig.aux;
  }
  return false;
}

int slot_of(const Signature& sig, const Variable& v) {
  if (!variable_in_range(sig, v)) {
    throw MathError("variable index " + std::to_string(v.index) + " out of range");
  }
  switch (v.kind) {
    case VarKind::kP:
      return v.index - 1;
    case VarKind::kQ:
      return sig.n + v.index - 1;
    case VarKind::kTheta:
      return v.index - 1;
    case VarKind::kAux:
      return sig.r() + v.index - 1;
  }
  return 0;
}

std::vector<Variable> generators(const Signature& sig) {
  std::vector<Variable> out;
  for (int i = 1; i <= sig.n; ++i) out.push_back(p(i));
  for (int i = 1; i <= sig.n; ++i) out.push_back(q(i));
  for (int i = 1; i <= sig.r(); ++i) out.push_back(theta(i));
  return out;
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

std::uint64_t bits_above(int bit) {
  return bit >= 63 ? 0 : ~((std::uint64_t{2} << bit) - 1);
}

std::uint64_t bits_below(int bit) { return (std::uint64_t{1} << bit) - 1; }

}  // namespace

Monomial Monomial::one(const Signature& sig) {
  Monomial m;
  m.even.assign(static_cast<std::size_t>(sig.even_count()), 0);
  return m;
}

int Monomial::degree() const {
  int d = std::popcount(odd);
  for (auto e : even) d += e;
  return d;
}

int Monomial::parity() const { return std::popcount(odd) & 1; }

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = hbar <=> other.hbar; c != 0) return c;
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  if (auto c = even.size() <=> other.even.size(); c != 0) return c;
  for (std::size_t i = 0; i < even.size(); ++i) {
    // Higher exponent on an earlier variable sorts first.
    if (auto c = other.even[i] <=> even[i]; c != 0) return c;
  }
  const std::uint64_t diff = odd ^ other.odd;
  if (diff == 0) return std::strong_ordering::equal;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (odd & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::optional<std::pair<int, Monomial>> multiply_monomials(const Monomial& lhs,
                                                           const Monomial& rhs) {
  if (lhs.odd & rhs.odd) return std::nullopt;
  int swaps = 0;
  for (std::uint64_t rest = rhs.odd; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    swaps += std::popcount(lhs.odd & bits_above(bit));
  }
  Monomial out = lhs;
  for (std::size_t i = 0; i < out.even.size(); ++i) out.even[i] += rhs.even[i];
  out.odd |= rhs.odd;
  out.hbar += rhs.hbar;
  return std::make_pair((swaps & 1) ? -1 : 1, std::move(out));
}

std::optional<MonomialDerivative> differentiate_monomial(const Monomial& m, bool odd,
                                                         int slot) {
  if (odd) {
    if (!m.has_odd_bit(slot)) return std::nullopt;
    const int before = std::popcount(m.odd & bits_below(slot));
    Monomial out = m;
    out.odd &= ~(std::uint64_t{1} << slot);
    return MonomialDerivative{(before & 1) ? -1L : 1L, std::move(out)};
  }
  const auto e = m.even[static_cast<std::size_t>(slot)];
  if (e == 0) return std::nullopt;
  Monomial out = m;
  out.even[static_cast<std::size_t>(slot)] = static_cast<std::uint16_t>(e - 1);
  return MonomialDerivative{static_cast<long>(e), std::move(out)};
}

bool TruncationPolicy::keeps(const Monomial& m) const {
  if (max_degree && m.degree() > *max_degree) return false;
  if (max_hbar && m.hbar > *max_hbar) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SuperPolynomial

SuperPolynomial::SuperPolynomial(SignaturePtr sig) : sig_(std::move(sig)) {
  if (!sig_) throw MathError("null signature");
}

SuperPolynomial SuperPolynomial::constant(SignaturePtr sig, const Rational& value) {
  SuperPolynomial out(std::move(sig));
  out.add_term(Monomial::one(*out.sig_), value);
  return out;
}

SuperPolynomial SuperPolynomial::variable(SignaturePtr sig, const Variable& v) {
  SuperPolynomial out(std::move(sig));
  const int slot = slot_of(*out.sig_, v);
  Monomial m = Monomial::one(*out.sig_);
  if (v.is_odd()) {
    m.odd = std::uint64_t{1} << slot;
  } else {
    m.even[static_cast<std::size_t>(slot)] = 1;
  }
  out.add_term(m, 1);
  return out;
}

SuperPolynomial SuperPolynomial::hbar(SignaturePtr sig, unsigned power) {
  SuperPolynomial out(std::move(sig));
  Monomial m = Monomial::one(*out.sig_);
  m.hbar = power;
  out.add_term(m, 1);
  return out;
}

SuperPolynomial SuperPolynomial::monomial(SignaturePtr sig, Monomial m, const Rational& c) {
  SuperPolynomial out(std::move(sig));
  if (m.even.size() != static_cast<std::size_t>(out.sig_->even_count())) {
    throw DimensionError("monomial does not match signature");
  }
  out.add_term(m, c);
  return out;
}

std::optional<int> SuperPolynomial::parity() const {
  std::optional<int> seen;
  for (const auto& [m, c] : terms_) {
    const int par = m.parity();
    if (seen && *seen != par) return std::nullopt;
    seen = par;
  }
  return seen.value_or(0);
}

std::pair<SuperPolynomial, SuperPolynomial> SuperPolynomial::split_by_parity() const {
  SuperPolynomial even(sig_);
  SuperPolynomial odd(sig_);
  for (const auto& [m, c] : terms_) {
    (m.parity() ? odd : even).terms_.emplace(m, c);
  }
  return {std::move(even), std::move(odd)};
}

unsigned SuperPolynomial::max_hbar() const {
  unsigned k = 0;
  for (const auto& [m, c] : terms_) k = std::max(k, m.hbar);
  return k;
}

int SuperPolynomial::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

SuperPolynomial SuperPolynomial::hbar_coefficient(unsigned k) const {
  SuperPolynomial out(sig_);
  for (const auto& [m, c] : terms_) {
    if (m.hbar != k) continue;
    Monomial stripped = m;
    stripped.hbar = 0;
    out.terms_.emplace(std::move(stripped), c);
  }
  return out;
}

Rational SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void SuperPolynomial::check_same(const SuperPolynomial& other) const {
  if (!same_signature(sig_, other.sig_)) throw SignatureMismatch();
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& other) {
  check_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& other) {
  check_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SuperPolynomial operator*(const SuperPolynomial& lhs, const SuperPolynomial& rhs) {
  lhs.check_same(rhs);
  SuperPolynomial out(lhs.sig_);
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      auto product = multiply_monomials(ml, mr);
      if (!product) continue;
      Rational c = cl * cr;
      if (product->first < 0) c = -c;
      out.add_term(product->second, c);
    }
  }
  return out;
}

bool SuperPolynomial::operator==(const SuperPolynomial& other) const {
  return same_signature(sig_, other.sig_) && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------
// Free operations

SuperPolynomial multiply(const SuperPolynomial& f, const SuperPolynomial& g) { return f * g; }

SuperPolynomial partial_derivative(const SuperPolynomial& f, const Variable& v) {
  const int slot = slot_of(*f.signature(), v);
  SuperPolynomial out(f.signature());
  for (const auto& [m, c] : f.terms()) {
    auto d = differentiate_monomial(m, v.is_odd(), slot);
    if (!d) continue;
    out.add_term(d->mono, c * d->factor);
  }
  return out;
}

SuperPolynomial power(const SuperPolynomial& f, unsigned exponent) {
  SuperPolynomial out = SuperPolynomial::constant(f.signature(), 1);
  for (unsigned i = 0; i < exponent; ++i) out = out * f;
  return out;
}

SuperPolynomial substitute_linear(const SuperPolynomial& f,
                                  const std::map<Variable, SuperPolynomial>& images) {
  const auto& sig = f.signature();
  for (const auto& [v, image] : images) {
    slot_of(*sig, v);
    if (!same_signature(sig, image.signature())) throw SignatureMismatch();
    const auto par = image.parity();
    if (!par || *par != (v.is_odd() ? 1 : 0)) {
      if (!image.is_zero()) throw ParityError("substitution image has the wrong parity");
    }
  }

  auto image_of = [&](const Variable& v) {
    auto it = images.find(v);
    return it == images.end() ? SuperPolynomial::variable(sig, v) : it->second;
  };

  // Per-variable images in slot order.
  std::vector<SuperPolynomial> even_images;
  for (int i = 1; i <= sig->n; ++i) even_images.push_back(image_of(p(i)));
  for (int i = 1; i <= sig->n; ++i) even_images.push_back(image_of(q(i)));
  std::vector<SuperPolynomial> odd_images;
  for (int i = 1; i <= sig->r(); ++i) odd_images.push_back(image_of(theta(i)));
  for (int i = 1; i <= sig->aux; ++i) odd_images.push_back(image_of(xi(i)));

  SuperPolynomial out(sig);
  for (const auto& [m, c] : f.terms()) {
    SuperPolynomial term = SuperPolynomial::hbar(sig, m.hbar) * c;
    for (std::size_t i = 0; i < m.even.size(); ++i) {
      if (m.even[i] != 0) term = term * power(even_images[i], m.even[i]);
    }
    for (std::uint64_t rest = m.odd; rest != 0; rest &= rest - 1) {
      term = term * odd_images[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    out += term;
  }
  return out;
}

SuperPolynomial truncate(const SuperPolynomial& f, const TruncationPolicy& policy) {
  SuperPolynomial out(f.signature());
  for (const auto& [m, c] : f.terms()) {
    if (policy.keeps(m)) out.add_term(m, c);
  }
  return out;
}

bool divisible_by_hbar(const SuperPolynomial& f, unsigned power) {
  for (const auto& [m, c] : f.terms()) {
    if (m.hbar < power) return false;
  }
  return true;
}

SuperPolynomial divide_by_hbar(const SuperPolynomial& f, unsigned power) {
  if (!divisible_by_hbar(f, power)) throw MathError("polynomial is not divisible by hbar");
  SuperPolynomial out(f.signature());
  for (const auto& [m, c] : f.terms()) {
    Monomial shifted = m;
    shifted.hbar -= power;
    out.add_term(shifted, c);
  }
  return out;
}

}  // namespace superstar
