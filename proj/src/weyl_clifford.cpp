#include "superstar/weyl_clifford.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <utility>

#include "superstar/errors.hpp"

namespace superstar {

namespace {

// Letters are encoded by rank: p_i -> i-1, q_i -> n+i-1, theta_i -> 2n+i-1.
using Word = std::vector<int>;
using WordKey = std::pair<Word, unsigned>;

int rank_of(const Signature& sig, const Variable& v) {
  if (v.kind == VarKind::kAux) throw MathError("aux-odd letters are not algebra generators");
  const int slot = slot_of(sig, v);
  return v.is_odd() ? sig.even_count() + slot : slot;
}

class Rewriter {
 public:
  Rewriter(const Signature& sig, RewriteStrategy strategy, std::mt19937_64* rng)
      : sig_(sig), strategy_(strategy), rng_(rng) {
    if (strategy_ == RewriteStrategy::kRandom && rng_ == nullptr) {
      throw MathError("random rewriting needs a generator");
    }
  }

  void push(Word word, unsigned hbar, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = pending_.try_emplace({std::move(word), hbar}, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) pending_.erase(it);
    }
  }

  // Drains the worklist; irreducible words accumulate into `out`.
  void run(SuperPolynomial& out) {
    while (!pending_.empty()) {
      auto node = pending_.extract(pending_.begin());
      auto& [word, hbar] = node.key();
      const Rational c = node.mapped();
      const auto redexes = find_redexes(word);
      if (redexes.empty()) {
        out.add_term(to_monomial(word, hbar), c);
        continue;
      }
      std::size_t pick = 0;
      if (strategy_ == RewriteStrategy::kRandom) {
        pick = std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(*rng_);
      }
      rewrite_at(word, hbar, c, redexes[pick]);
    }
  }

 private:
  bool is_odd_rank(int rank) const { return rank >= sig_.even_count(); }

  std::vector<std::size_t> find_redexes(const Word& word) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      const int x = word[i];
      const int y = word[i + 1];
      if (x > y || (x == y && is_odd_rank(x))) out.push_back(i);
    }
    return out;
  }

  void rewrite_at(const Word& word, unsigned hbar, const Rational& c, std::size_t i) {
    const int x = word[i];
    const int y = word[i + 1];
    auto without_pair = [&] {
      Word shorter(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
      shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 2,
                     word.end());
      return shorter;
    };
    Word swapped = word;
    std::swap(swapped[i], swapped[i + 1]);

    if (x == y) {
      // theta_i theta_i = -(hbar/2) eps_i
      const int eps = sig_.epsilons[static_cast<std::size_t>(x - sig_.even_count())];
      push(without_pair(), hbar + 1, c * make_rational(-eps, 2));
      return;
    }
    if (is_odd_rank(x) && is_odd_rank(y)) {
      push(std::move(swapped), hbar, -c);
      return;
    }
    if (x == y + sig_.n && y < sig_.n) {
      // q_i p_i = p_i q_i - hbar
      push(std::move(swapped), hbar, c);
      push(without_pair(), hbar + 1, -c);
      return;
    }
    push(std::move(swapped), hbar, c);
  }

  Monomial to_monomial(const Word& word, unsigned hbar) const {
    Monomial m = Monomial::one(sig_);
    m.hbar = hbar;
    for (int rank : word) {
      if (is_odd_rank(rank)) {
        m.odd |= std::uint64_t{1} << (rank - sig_.even_count());
      } else {
        ++m.even[static_cast<std::size_t>(rank)];
      }
    }
    return m;
  }

  const Signature& sig_;
  RewriteStrategy strategy_;
  std::mt19937_64* rng_;
  std::map<WordKey, Rational> pending_;
};

// The PBW word spelled by a canonical monomial.
Word word_of(const Signature& sig, const Monomial& m) {
  if (m.odd >> sig.r()) throw MathError("aux-odd letters are not algebra generators");
  Word word;
  for (std::size_t slot = 0; slot < m.even.size(); ++slot) {
    word.insert(word.end(), m.even[slot], static_cast<int>(slot));
  }
  for (std::uint64_t rest = m.odd; rest != 0; rest &= rest - 1) {
    word.push_back(sig.even_count() + std::countr_zero(rest));
  }
  return word;
}

Rational falling_factorial(unsigned top, unsigned k) {
  Rational out = 1;
  for (unsigned j = 0; j < k; ++j) out *= top - j;
  return out;
}

Rational factorial(unsigned k) { return falling_factorial(k, k); }

}  // namespace

std::string to_string(const GeneratorWord& word) {
  std::ostringstream os;
  if (word.letters.empty()) return "1";
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    const auto& v = word.letters[i];
    if (i) os << ' ';
    switch (v.kind) {
      case VarKind::kP: os << 'p'; break;
      case VarKind::kQ: os << 'q'; break;
      case VarKind::kTheta: os << 't'; break;
      case VarKind::kAux: os << 'x'; break;
    }
    os << v.index;
  }
  return os.str();
}

NormalOrderedElement normal_order(const SignaturePtr& sig, const GeneratorWord& word,
                                  RewriteStrategy strategy, std::mt19937_64* rng) {
  Rewriter rewriter(*sig, strategy, rng);
  Word ranks;
  for (const auto& v : word.letters) ranks.push_back(rank_of(*sig, v));
  rewriter.push(std::move(ranks), word.hbar, word.coefficient);
  SuperPolynomial out(sig);
  rewriter.run(out);
  return {std::move(out)};
}

NormalOrderedElement rewrite_mul(const NormalOrderedElement& x, const NormalOrderedElement& y) {
  const auto& sig = x.pbw.signature();
  if (!same_signature(sig, y.pbw.signature())) throw SignatureMismatch();
  Rewriter rewriter(*sig, RewriteStrategy::kLeftmost, nullptr);
  for (const auto& [mx, cx] : x.pbw.terms()) {
    const Word wx = word_of(*sig, mx);
    for (const auto& [my, cy] : y.pbw.terms()) {
      Word joined = wx;
      const Word wy = word_of(*sig, my);
      joined.insert(joined.end(), wy.begin(), wy.end());
      rewriter.push(std::move(joined), mx.hbar + my.hbar, cx * cy);
    }
  }
  SuperPolynomial out(sig);
  rewriter.run(out);
  return {std::move(out)};
}

SuperPolynomial to_star_basis(const NormalOrderedElement& x) {
  const auto& sig = x.pbw.signature();
  const int n = sig->n;
  SuperPolynomial out(sig);
  for (const auto& [m, c] : x.pbw.terms()) {
    // Odd letters and the hbar power pass through unchanged.
    Monomial base = Monomial::one(*sig);
    base.odd = m.odd;
    base.hbar = m.hbar;
    SuperPolynomial image = SuperPolynomial::monomial(sig, base, c);
    for (int i = 0; i < n; ++i) {
      const unsigned a = m.even[static_cast<std::size_t>(i)];
      const unsigned b = m.even[static_cast<std::size_t>(n + i)];
      SuperPolynomial factor(sig);
      for (unsigned k = 0; k <= std::min(a, b); ++k) {
        Monomial mono = Monomial::one(*sig);
        mono.even[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(a - k);
        mono.even[static_cast<std::size_t>(n + i)] = static_cast<std::uint16_t>(b - k);
        mono.hbar = k;
        Rational weight = falling_factorial(a, k) * falling_factorial(b, k) / factorial(k);
        for (unsigned j = 0; j < k; ++j) weight /= 2;
        factor.add_term(mono, weight);
      }
      image = factor * image;
    }
    out += image;
  }
  return out;
}

NormalOrderedElement from_star_basis(const SuperPolynomial& f) {
  const auto& sig = f.signature();
  SuperPolynomial rest = f;
  SuperPolynomial pbw(sig);
  while (!rest.is_zero()) {
    // Leading term: maximal degree; its image has that term plus lower-degree
    // corrections only.
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : rest.terms()) {
      if (!lead || m.degree() > lead->degree()) lead = &m;
    }
    const Monomial m = *lead;
    const Rational c = rest.coefficient(m);
    pbw.add_term(m, c);
    rest -= to_star_basis({SuperPolynomial::monomial(sig, m, c)});
  }
  return {std::move(pbw)};
}

std::vector<GeneratorWord> all_words(const Signature& sig, std::size_t max_length) {
  const auto letters = generators(sig);
  std::vector<GeneratorWord> out{GeneratorWord{}};
  std::vector<GeneratorWord> frontier{GeneratorWord{}};
  for (std::size_t len = 1; len <= max_length && !letters.empty(); ++len) {
    std::vector<GeneratorWord> next;
    for (const auto& w : frontier) {
      for (const auto& v : letters) {
        GeneratorWord longer = w;
        longer.letters.push_back(v);
        next.push_back(std::move(longer));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

IsoReport iso_check(const StarContext& ctx, const std::vector<GeneratorWord>& words) {
  const auto& sig = ctx.signature();
  IsoReport report;
  for (const auto& word : words) {
    ++report.checked;
    SuperPolynomial rewritten = to_star_basis(normal_order(sig, word));

    Monomial scale = Monomial::one(*sig);
    scale.hbar = word.hbar;
    SuperPolynomial starred = SuperPolynomial::monomial(sig, scale, word.coefficient);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
      starred = star(ctx, SuperPolynomial::variable(sig, *it), starred);
    }
    if (!(rewritten == starred)) {
      report.mismatches.push_back({word, std::move(rewritten), std::move(starred)});
    }
  }
  return report;
}

}  // namespace superstar
