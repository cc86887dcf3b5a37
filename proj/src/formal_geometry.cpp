#include "superstar/formal_geometry.hpp"

#include <bit>
#include <set>

#include "superstar/errors.hpp"

namespace superstar {

namespace {

int variable_parity(const Variable& v) { return v.is_odd() ? 1 : 0; }

void check_images(const Signature& sig, const SignaturePtr& sig_ptr,
                  const std::vector<SuperPolynomial>& images) {
  if (images.size() != static_cast<std::size_t>(sig.generator_count())) {
    throw DimensionError("vector field needs one image per generator");
  }
  for (const auto& image : images) {
    if (!same_signature(sig_ptr, image.signature())) throw SignatureMismatch();
  }
}

}  // namespace

FormalVectorField::FormalVectorField(SignaturePtr sig, std::vector<SuperPolynomial> images)
    : sig_(std::move(sig)), images_(std::move(images)) {
  check_images(*sig_, sig_, images_);
  const auto vars = generators(*sig_);
  std::set<int> seen;
  bool mixed = false;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (images_[i].is_zero()) continue;
    const auto par = images_[i].parity();
    if (!par) {
      mixed = true;
      break;
    }
    seen.insert((*par + variable_parity(vars[i])) % 2);
  }
  if (!mixed && seen.size() <= 1) parity_ = seen.empty() ? 0 : *seen.begin();
}

FormalVectorField::FormalVectorField(SignaturePtr sig, std::vector<SuperPolynomial> images,
                                     int parity)
    : sig_(std::move(sig)), images_(std::move(images)), parity_(parity & 1) {
  check_images(*sig_, sig_, images_);
  const auto vars = generators(*sig_);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (images_[i].is_zero()) continue;
    const auto par = images_[i].parity();
    if (!par || (*par + variable_parity(vars[i])) % 2 != *parity_) {
      throw ParityError("vector field image violates the parity discipline");
    }
  }
}

FormalVectorField FormalVectorField::zero(SignaturePtr sig) {
  std::vector<SuperPolynomial> images(static_cast<std::size_t>(sig->generator_count()),
                                      SuperPolynomial(sig));
  return FormalVectorField(sig, std::move(images), 0);
}

const SuperPolynomial& FormalVectorField::image(const Variable& v) const {
  const auto vars = generators(*sig_);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == v) return images_[i];
  }
  throw MathError("vector fields act on generators only");
}

SuperPolynomial FormalVectorField::apply(const SuperPolynomial& f) const {
  if (!same_signature(sig_, f.signature())) throw SignatureMismatch();
  const auto vars = generators(*sig_);
  SuperPolynomial out(sig_);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (images_[i].is_zero()) continue;
    out += images_[i] * partial_derivative(f, vars[i]);
  }
  return out;
}

std::pair<FormalVectorField, FormalVectorField> FormalVectorField::split_by_parity() const {
  const auto vars = generators(*sig_);
  std::vector<SuperPolynomial> even_images;
  std::vector<SuperPolynomial> odd_images;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto [e, o] = images_[i].split_by_parity();
    if (vars[i].is_odd()) std::swap(e, o);
    even_images.push_back(std::move(e));
    odd_images.push_back(std::move(o));
  }
  return {FormalVectorField(sig_, std::move(even_images), 0),
          FormalVectorField(sig_, std::move(odd_images), 1)};
}

FormalVectorField operator+(const FormalVectorField& lhs, const FormalVectorField& rhs) {
  if (!same_signature(lhs.signature(), rhs.signature())) throw SignatureMismatch();
  std::vector<SuperPolynomial> images;
  for (std::size_t i = 0; i < lhs.images().size(); ++i) {
    images.push_back(lhs.images()[i] + rhs.images()[i]);
  }
  return FormalVectorField(lhs.signature(), std::move(images));
}

namespace {

FormalVectorField pure_commutator(const FormalVectorField& v, const FormalVectorField& w) {
  const int sign = (*v.parity() & *w.parity()) ? -1 : 1;
  std::vector<SuperPolynomial> images;
  for (std::size_t i = 0; i < v.images().size(); ++i) {
    images.push_back(v.apply(w.images()[i]) - w.apply(v.images()[i]) * Rational(sign));
  }
  return FormalVectorField(v.signature(), std::move(images), *v.parity() ^ *w.parity());
}

}  // namespace

FormalVectorField commutator(const FormalVectorField& v, const FormalVectorField& w) {
  if (!same_signature(v.signature(), w.signature())) throw SignatureMismatch();
  auto [v0, v1] = v.split_by_parity();
  auto [w0, w1] = w.split_by_parity();
  return pure_commutator(v0, w0) + pure_commutator(v0, w1) + pure_commutator(v1, w0) +
         pure_commutator(v1, w1);
}

FormalVectorField hamiltonian_vf(const PoissonContext& ctx, const SuperPolynomial& h) {
  if (!same_signature(ctx.signature(), h.signature())) throw SignatureMismatch();
  std::vector<SuperPolynomial> images;
  for (const auto& z : generators(*ctx.signature())) {
    images.push_back(poisson_bracket(ctx, h, SuperPolynomial::variable(ctx.signature(), z)));
  }
  return FormalVectorField(ctx.signature(), std::move(images));
}

bool is_poisson_derivation(
    const PoissonContext& ctx, const FormalVectorField& v,
    const std::vector<std::pair<SuperPolynomial, SuperPolynomial>>& samples) {
  auto [v0, v1] = v.split_by_parity();
  for (const auto* part : {&v0, &v1}) {
    const int pv = *part->parity();
    for (const auto& [x_full, y_full] : samples) {
      auto [x0, x1] = x_full.split_by_parity();
      for (const auto* x : {&x0, &x1}) {
        if (x->is_zero()) continue;
        const int sign = (pv & *x->parity()) ? -1 : 1;
        const auto lhs = part->apply(poisson_bracket(ctx, *x, y_full));
        const auto rhs = poisson_bracket(ctx, part->apply(*x), y_full) +
                         poisson_bracket(ctx, *x, part->apply(y_full)) * Rational(sign);
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

OriginSplit split_at_origin(const FormalVectorField& v) {
  const auto& sig = v.signature();
  const Monomial one = Monomial::one(*sig);
  std::vector<SuperPolynomial> images;
  std::vector<Rational> translation;
  for (const auto& image : v.images()) {
    const Rational c = image.coefficient(one);
    translation.push_back(c);
    images.push_back(image - SuperPolynomial::constant(sig, c));
  }
  return {FormalVectorField(sig, std::move(images)), std::move(translation)};
}

FormalVectorField recombine(const OriginSplit& split) {
  const auto& sig = split.vanishing.signature();
  std::vector<SuperPolynomial> images;
  for (std::size_t i = 0; i < split.translation.size(); ++i) {
    images.push_back(split.vanishing.images()[i] +
                     SuperPolynomial::constant(sig, split.translation[i]));
  }
  return FormalVectorField(sig, std::move(images));
}

// ---------------------------------------------------------------------------
// Jets

SignaturePtr jet_signature(const Signature& base) {
  std::vector<int> eps = base.epsilons;
  eps.insert(eps.end(), base.epsilons.begin(), base.epsilons.end());
  return make_signature(Signature::with_epsilons(2 * base.n, std::move(eps), base.aux));
}

Variable fiber_partner(const Signature& base, const Variable& v) {
  switch (v.kind) {
    case VarKind::kP:
      return p(base.n + v.index);
    case VarKind::kQ:
      return q(base.n + v.index);
    case VarKind::kTheta:
      return theta(base.r() + v.index);
    case VarKind::kAux:
      break;
  }
  throw MathError("aux-odd variables have no fiber partner");
}

int fiber_degree(const Signature& base, const Monomial& m) {
  const auto n = static_cast<std::size_t>(base.n);
  int d = 0;
  for (std::size_t i = 0; i < n; ++i) d += m.even[n + i] + m.even[3 * n + i];
  const std::uint64_t fiber_mask = ((std::uint64_t{1} << base.r()) - 1) << base.r();
  return d + std::popcount(m.odd & fiber_mask);
}

JetElement lift_to_jet(const SuperPolynomial& f) {
  const auto& base = *f.signature();
  auto jet_sig = jet_signature(base);
  const auto n = static_cast<std::size_t>(base.n);
  const int r = base.r();
  SuperPolynomial out(jet_sig);
  for (const auto& [m, c] : f.terms()) {
    Monomial lifted = Monomial::one(*jet_sig);
    lifted.hbar = m.hbar;
    for (std::size_t i = 0; i < n; ++i) {
      lifted.even[i] = m.even[i];
      lifted.even[2 * n + i] = m.even[n + i];
    }
    const std::uint64_t theta_bits = m.odd & ((std::uint64_t{1} << r) - 1);
    const std::uint64_t aux_bits = r >= 64 ? 0 : m.odd >> r;
    // No fiber thetas sit between, so moving the aux block is sign-free.
    lifted.odd = theta_bits | (2 * r >= 64 ? 0 : aux_bits << (2 * r));
    out.add_term(lifted, c);
  }
  return {f.signature(), std::move(out)};
}

JetElement taylor_jet(const SuperPolynomial& f, int order) {
  const auto& base = *f.signature();
  JetElement lifted = lift_to_jet(f);
  const auto& jet_sig = lifted.poly.signature();
  std::map<Variable, SuperPolynomial> shift;
  for (const auto& z : generators(base)) {
    shift.emplace(z, SuperPolynomial::variable(jet_sig, z) +
                         SuperPolynomial::variable(jet_sig, fiber_partner(base, z)));
  }
  SuperPolynomial expanded = substitute_linear(lifted.poly, shift);
  SuperPolynomial out(jet_sig);
  for (const auto& [m, c] : expanded.terms()) {
    if (fiber_degree(base, m) <= order) out.add_term(m, c);
  }
  return {f.signature(), std::move(out)};
}

std::vector<JetElement> jet_flatness_defect(const JetElement& j) {
  const auto& base = *j.base;
  std::vector<JetElement> out;
  for (const auto& z : generators(base)) {
    out.push_back({j.base, partial_derivative(j.poly, z) -
                               partial_derivative(j.poly, fiber_partner(base, z))});
  }
  return out;
}

bool is_flat(const JetElement& j) {
  for (const auto& component : jet_flatness_defect(j)) {
    if (!component.poly.is_zero()) return false;
  }
  return true;
}

SuperPolynomial restrict_to_base(const JetElement& j) {
  const auto& base = *j.base;
  const auto n = static_cast<std::size_t>(base.n);
  const int r = base.r();
  SuperPolynomial out(j.base);
  for (const auto& [m, c] : j.poly.terms()) {
    if (fiber_degree(base, m) != 0) continue;
    Monomial restricted = Monomial::one(base);
    restricted.hbar = m.hbar;
    for (std::size_t i = 0; i < n; ++i) {
      restricted.even[i] = m.even[i];
      restricted.even[n + i] = m.even[2 * n + i];
    }
    const std::uint64_t aux_bits = 2 * r >= 64 ? 0 : m.odd >> (2 * r);
    restricted.odd = (m.odd & ((std::uint64_t{1} << r) - 1)) | (aux_bits << r);
    out.add_term(restricted, c);
  }
  return out;
}

}  // namespace superstar
