#include "superstar/random.hpp"

#include <algorithm>
#include <numeric>

namespace superstar {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

RationalMatrix identity_matrix(std::size_t dim) {
  RationalMatrix m(dim, std::vector<Rational>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t dim = a.size();
  RationalMatrix out(dim, std::vector<Rational>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// Nonzero rational with small height, suitable as a group parameter.
Rational small_parameter(std::mt19937_64& rng) {
  return make_rational(uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, 3));
}

RationalMatrix random_even_factor(std::mt19937_64& rng, std::size_t n) {
  RationalMatrix m = identity_matrix(2 * n);
  if (n == 0) return m;
  switch (uniform(rng, 0, 3)) {
    case 0: {  // [[I, S], [0, I]], S symmetric
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      const Rational s = small_parameter(rng);
      m[i][n + j] += s;
      if (i != j) m[j][n + i] += s;
      break;
    }
    case 1: {  // [[I, 0], [S, I]]
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      const Rational s = small_parameter(rng);
      m[n + i][j] += s;
      if (i != j) m[n + j][i] += s;
      break;
    }
    case 2: {  // diag(t, 1/t) on one (p_i, q_i) pair
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      const Rational t = small_parameter(rng);
      m[i][i] = t;
      m[n + i][n + i] = 1 / t;
      break;
    }
    default: {  // [[E, 0], [0, E^{-T}]] with E elementary
      if (n < 2) break;
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
      if (j >= i) ++j;
      const Rational s = small_parameter(rng);
      m[i][j] = s;
      m[n + j][n + i] = -s;
      break;
    }
  }
  return m;
}

RationalMatrix random_odd_factor(std::mt19937_64& rng, const std::vector<int>& eps) {
  const std::size_t r = eps.size();
  RationalMatrix m = identity_matrix(r);
  if (r == 0) return m;
  const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r) - 1));
  if (r == 1 || uniform(rng, 0, 4) == 0) {
    m[i][i] = -1;
    return m;
  }
  auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r) - 2));
  if (j >= i) ++j;
  // |t| < 1 keeps the boost parameterization regular.
  const Rational t = make_rational(uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1),
                                   uniform(rng, 4, 6));
  const Rational t2 = t * t;
  if (eps[i] == eps[j]) {
    const Rational c = (1 - t2) / (1 + t2);
    const Rational s = 2 * t / (1 + t2);
    m[i][i] = c;
    m[i][j] = -s;
    m[j][i] = s;
    m[j][j] = c;
  } else {
    const Rational c = (1 + t2) / (1 - t2);
    const Rational s = 2 * t / (1 - t2);
    m[i][i] = c;
    m[i][j] = s;
    m[j][i] = s;
    m[j][j] = c;
  }
  return m;
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, int range, bool nonzero) {
  int num = 0;
  do {
    num = uniform(rng, -range, range);
  } while (nonzero && num == 0);
  return make_rational(num, uniform(rng, 1, 2));
}

SuperPolynomial random_pure_polynomial(std::mt19937_64& rng, const SignaturePtr& sig,
                                       int parity, const RandomPolynomialSpec& spec) {
  SuperPolynomial out(sig);
  const int even_vars = sig->even_count();
  const int r = sig->r();
  if (parity == 1 && r == 0) return out;
  const int terms = uniform(rng, 1, std::max(1, spec.max_terms));
  for (int t = 0; t < terms; ++t) {
    int degree = uniform(rng, 0, spec.max_degree);
    // Odd count with the requested parity, at most min(degree, r).
    std::vector<int> odd_options;
    for (int k = parity; k <= std::min(degree, r); k += 2) {
      if (even_vars > 0 || k == degree) odd_options.push_back(k);
    }
    if (odd_options.empty()) {
      if (parity == 0) {
        odd_options.push_back(0);
        degree = 0;
      } else {
        odd_options.push_back(1);
        degree = std::max(degree, 1);
        if (even_vars == 0) degree = 1;
      }
    }
    const int odd_count = odd_options[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<int>(odd_options.size()) - 1))];
    Monomial m = Monomial::one(*sig);
    for (int k = 0; k < degree - odd_count; ++k) {
      ++m.even[static_cast<std::size_t>(uniform(rng, 0, even_vars - 1))];
    }
    std::vector<int> bits(static_cast<std::size_t>(r));
    std::iota(bits.begin(), bits.end(), 0);
    std::shuffle(bits.begin(), bits.end(), rng);
    for (int k = 0; k < odd_count; ++k) m.odd |= std::uint64_t{1} << bits[static_cast<std::size_t>(k)];
    if (spec.include_hbar) m.hbar = static_cast<unsigned>(uniform(rng, 0, 2));
    out.add_term(m, random_rational(rng, spec.coefficient_range));
  }
  return out;
}

SuperPolynomial random_polynomial(std::mt19937_64& rng, const SignaturePtr& sig,
                                  const RandomPolynomialSpec& spec, bool with_aux) {
  SuperPolynomial out = random_pure_polynomial(rng, sig, 0, spec) +
                        random_pure_polynomial(rng, sig, 1, spec);
  if (with_aux && sig->aux > 0) {
    const int k = uniform(rng, 1, sig->aux);
    out += SuperPolynomial::variable(sig, xi(k)) * random_pure_polynomial(rng, sig, 0, spec);
  }
  return out;
}

SuperMatrix random_sp_member(std::mt19937_64& rng, const SignaturePtr& sig, int factors) {
  const auto n = static_cast<std::size_t>(sig->n);
  RationalMatrix even = identity_matrix(2 * n);
  RationalMatrix odd = identity_matrix(static_cast<std::size_t>(sig->r()));
  for (int k = 0; k < factors; ++k) {
    even = matmul(even, random_even_factor(rng, n));
    odd = matmul(odd, random_odd_factor(rng, sig->epsilons));
  }
  return SuperMatrix::block_diagonal(sig, even, odd);
}

SuperMatrix random_sp_lie_member(std::mt19937_64& rng, const SignaturePtr& sig) {
  const auto n = static_cast<std::size_t>(sig->n);
  const auto r = static_cast<std::size_t>(sig->r());
  RationalMatrix even(2 * n, std::vector<Rational>(2 * n, 0));
  // [[A, B], [C, -A^T]] with B, C symmetric.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational a = random_rational(rng, 2, false);
      even[i][j] = a;
      even[n + j][n + i] = -a;
      if (j < i) continue;
      const Rational b = random_rational(rng, 2, false);
      const Rational c = random_rational(rng, 2, false);
      even[i][n + j] = even[j][n + i] = b;
      even[n + i][j] = even[n + j][i] = c;
    }
  }
  // G K with K antisymmetric.
  RationalMatrix odd(r, std::vector<Rational>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const Rational k = random_rational(rng, 2, false);
      odd[i][j] = sig->epsilons[i] * k;
      odd[j][i] = -sig->epsilons[j] * k;
    }
  }
  return SuperMatrix::block_diagonal(sig, even, odd);
}

SuperMatrix random_parity_matrix(std::mt19937_64& rng, const SignaturePtr& sig) {
  SuperMatrix m = SuperMatrix::zero(sig);
  const int even = sig->even_count();
  const int aux = sig->aux;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      const bool diagonal_block = (i < even) == (j < even);
      SuperPolynomial entry(sig);
      if (diagonal_block) {
        entry += SuperPolynomial::constant(sig, random_rational(rng, 3, false));
        if (aux >= 2) {
          const int k = uniform(rng, 1, aux - 1);
          entry += SuperPolynomial::variable(sig, xi(k)) *
                   SuperPolynomial::variable(sig, xi(k + 1)) * random_rational(rng, 2);
        }
      } else if (aux >= 1) {
        entry += SuperPolynomial::variable(sig, xi(uniform(rng, 1, aux))) *
                 random_rational(rng, 2, false);
      }
      m.at(i, j) = entry;
    }
  }
  return m;
}

}  // namespace superstar
