#include "superstar/invariants.hpp"

#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "superstar/expression.hpp"
#include "superstar/formal_geometry.hpp"
#include "superstar/poisson.hpp"
#include "superstar/random.hpp"
#include "superstar/star_product.hpp"
#include "superstar/symplectic_linear.hpp"
#include "superstar/weyl_clifford.hpp"

namespace superstar {

std::optional<Fault> parse_fault(std::string_view name) {
  if (name == "none") return Fault::kNone;
  if (name == "star-reversed") return Fault::kStarReversed;
  if (name == "bracket-scaled") return Fault::kBracketScaled;
  if (name == "no-koszul") return Fault::kNoKoszulSign;
  return std::nullopt;
}

bool SuiteReport::ok() const {
  for (const auto& o : outcomes) {
    if (!o.passed) return false;
  }
  return true;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    os << (o.passed ? "PASS " : "FAIL ") << o.name << " (" << o.cases << " cases)";
    if (!o.passed) {
      ++failed;
      os << ": " << o.detail;
    }
    os << '\n';
  }
  os << (failed == 0 ? "all " + std::to_string(outcomes.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(outcomes.size()) +
                           " checks failed")
     << '\n';
  return os.str();
}

namespace {

// Operations under test, with the configured fault applied.
struct Ops {
  StarContext ctx;
  Fault fault;

  SuperPolynomial mul(const SuperPolynomial& f, const SuperPolynomial& g) const {
    if (fault != Fault::kNoKoszulSign) return f * g;
    SuperPolynomial out(f.signature());
    for (const auto& [mf, cf] : f.terms()) {
      for (const auto& [mg, cg] : g.terms()) {
        if (auto prod = multiply_monomials(mf, mg)) out.add_term(prod->second, cf * cg);
      }
    }
    return out;
  }

  SuperPolynomial star(const SuperPolynomial& f, const SuperPolynomial& g) const {
    SuperPolynomial out = superstar::star(ctx, f, g);
    if (fault != Fault::kStarReversed) return out;
    SuperPolynomial flipped(out.signature());
    for (const auto& [m, c] : out.terms()) flipped.add_term(m, (m.hbar & 1U) ? Rational(-c) : c);
    return flipped;
  }

  SuperPolynomial bracket(const SuperPolynomial& f, const SuperPolynomial& g) const {
    SuperPolynomial out = poisson_bracket(ctx.poisson, f, g);
    return fault == Fault::kBracketScaled ? out * Rational(2) : out;
  }

  SuperPolynomial commutator(const SuperPolynomial& f, const SuperPolynomial& g) const {
    const int sign = (*f.parity() & *g.parity()) ? -1 : 1;
    return star(f, g) - star(g, f) * Rational(sign);
  }
};

class Tally {
 public:
  explicit Tally(std::string name) { outcome_.name = std::move(name); outcome_.passed = true; }

  void expect(bool ok, const std::function<std::string()>& detail) {
    ++outcome_.cases;
    if (!ok && outcome_.passed) {
      outcome_.passed = false;
      outcome_.detail = detail();
    }
  }

  CheckOutcome done() { return std::move(outcome_); }

 private:
  CheckOutcome outcome_;
};

std::string show(const SuperPolynomial& f) { return format_expression(f); }

std::string show_pair(const SuperPolynomial& f, const SuperPolynomial& g) {
  return "f = " + show(f) + ", g = " + show(g);
}

std::string show_triple(const SuperPolynomial& f, const SuperPolynomial& g,
                        const SuperPolynomial& h) {
  return show_pair(f, g) + ", h = " + show(h);
}

int sign_of(int parity_product) { return (parity_product & 1) ? -1 : 1; }

struct Env {
  SignaturePtr sig;
  Ops ops;
  int degree;
  int cases;

  int random_parity(std::mt19937_64& rng) const {
    return sig->r() == 0 ? 0 : std::uniform_int_distribution<int>(0, 1)(rng);
  }

  SuperPolynomial pure(std::mt19937_64& rng, int max_degree = -1) const {
    RandomPolynomialSpec spec;
    spec.max_degree = max_degree < 0 ? degree : max_degree;
    return random_pure_polynomial(rng, sig, random_parity(rng), spec);
  }

  SuperPolynomial var(const Variable& v) const { return SuperPolynomial::variable(sig, v); }
  SuperPolynomial hbar() const { return SuperPolynomial::hbar(sig); }
};

using CheckFn = std::function<CheckOutcome(const Env&, std::mt19937_64&)>;

std::vector<std::pair<std::string, CheckFn>> all_checks() {
  std::vector<std::pair<std::string, CheckFn>> checks;
  auto add = [&](std::string name, CheckFn fn) { checks.emplace_back(std::move(name), std::move(fn)); };

  // -- graded algebra ------------------------------------------------------
  add("graded.supercommutativity", [](const Env& env, std::mt19937_64& rng) {
    Tally t("graded.supercommutativity");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng);
      auto g = env.pure(rng);
      const int s = sign_of(*f.parity() * *g.parity());
      t.expect(env.ops.mul(f, g) == env.ops.mul(g, f) * Rational(s), [&] { return show_pair(f, g); });
    }
    return t.done();
  });
  add("graded.associativity", [](const Env& env, std::mt19937_64& rng) {
    Tally t("graded.associativity");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng), h = env.pure(rng);
      t.expect(env.ops.mul(env.ops.mul(f, g), h) == env.ops.mul(f, env.ops.mul(g, h)),
               [&] { return show_triple(f, g, h); });
    }
    return t.done();
  });
  add("graded.leibniz", [](const Env& env, std::mt19937_64& rng) {
    Tally t("graded.leibniz");
    const auto vars = generators(*env.sig);
    if (vars.empty()) return t.done();
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng);
      const auto& v = vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)];
      const int s = v.is_odd() ? sign_of(*f.parity()) : 1;
      const auto lhs = partial_derivative(env.ops.mul(f, g), v);
      const auto rhs = env.ops.mul(partial_derivative(f, v), g) +
                       env.ops.mul(f, partial_derivative(g, v)) * Rational(s);
      t.expect(lhs == rhs, [&] { return show_pair(f, g) + ", d/d" + variable_name(v); });
    }
    return t.done();
  });
  add("graded.partials_anticommute", [](const Env& env, std::mt19937_64& rng) {
    Tally t("graded.partials_anticommute");
    const auto vars = generators(*env.sig);
    if (vars.empty()) return t.done();
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    for (int k = 0; k < env.cases; ++k) {
      RandomPolynomialSpec spec;
      spec.max_degree = env.degree;
      auto f = random_polynomial(rng, env.sig, spec);
      const auto& u = vars[pick(rng)];
      const auto& v = vars[pick(rng)];
      const int s = (u.is_odd() && v.is_odd()) ? -1 : 1;
      const auto uv = partial_derivative(partial_derivative(f, v), u);
      const auto vu = partial_derivative(partial_derivative(f, u), v);
      bool ok = uv == vu * Rational(s);
      t.expect(ok, [&] { return "f = " + show(f) + ", " + variable_name(u) + ", " + variable_name(v); });
    }
    return t.done();
  });
  add("graded.substitution_is_algebra_map", [](const Env& env, std::mt19937_64& rng) {
    Tally t("graded.substitution_is_algebra_map");
    const auto vars = generators(*env.sig);
    for (int k = 0; k < env.cases; ++k) {
      const auto m = random_sp_member(rng, env.sig, 2);
      std::map<Variable, SuperPolynomial> images;
      for (std::size_t j = 0; j < vars.size(); ++j) {
        SuperPolynomial image(env.sig);
        for (std::size_t i = 0; i < vars.size(); ++i) {
          image += m.at(static_cast<int>(i), static_cast<int>(j)) * env.var(vars[i]);
        }
        images.emplace(vars[j], image);
      }
      auto f = env.pure(rng), g = env.pure(rng);
      t.expect(substitute_linear(env.ops.mul(f, g), images) ==
                   env.ops.mul(substitute_linear(f, images), substitute_linear(g, images)),
               [&] { return show_pair(f, g); });
    }
    return t.done();
  });
  add("graded.truncate_idempotent", [](const Env& env, std::mt19937_64& rng) {
    Tally t("graded.truncate_idempotent");
    for (int k = 0; k < env.cases; ++k) {
      RandomPolynomialSpec spec;
      spec.max_degree = env.degree;
      spec.include_hbar = true;
      auto f = random_polynomial(rng, env.sig, spec);
      TruncationPolicy policy{std::uniform_int_distribution<int>(0, env.degree)(rng),
                              std::uniform_int_distribution<unsigned>(0, 2)(rng)};
      const auto once = truncate(f, policy);
      t.expect(truncate(once, policy) == once, [&] { return "f = " + show(f); });
    }
    return t.done();
  });

  // -- Poisson -------------------------------------------------------------
  add("poisson.generator_table", [](const Env& env, std::mt19937_64&) {
    Tally t("poisson.generator_table");
    const auto vars = generators(*env.sig);
    const auto& sig = *env.sig;
    for (const auto& u : vars) {
      for (const auto& v : vars) {
        Rational expected = 0;
        if (u.kind == VarKind::kP && v.kind == VarKind::kQ && u.index == v.index) expected = 1;
        if (u.kind == VarKind::kQ && v.kind == VarKind::kP && u.index == v.index) expected = -1;
        if (u.kind == VarKind::kTheta && v.kind == VarKind::kTheta && u.index == v.index) {
          expected = -sig.epsilons[static_cast<std::size_t>(u.index - 1)];
        }
        const auto got = env.ops.bracket(env.var(u), env.var(v));
        t.expect(got == SuperPolynomial::constant(env.sig, expected), [&] {
          return "{" + variable_name(u) + "," + variable_name(v) + "} = " + show(got);
        });
      }
    }
    return t.done();
  });
  add("poisson.antisymmetry", [](const Env& env, std::mt19937_64& rng) {
    Tally t("poisson.antisymmetry");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng);
      const int s = -sign_of(*f.parity() * *g.parity());
      t.expect(env.ops.bracket(f, g) == env.ops.bracket(g, f) * Rational(s),
               [&] { return show_pair(f, g); });
    }
    return t.done();
  });
  add("poisson.leibniz", [](const Env& env, std::mt19937_64& rng) {
    Tally t("poisson.leibniz");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng), h = env.pure(rng);
      const int s = sign_of(*f.parity() * *g.parity());
      const auto lhs = env.ops.bracket(f, env.ops.mul(g, h));
      const auto rhs = env.ops.mul(env.ops.bracket(f, g), h) +
                       env.ops.mul(g, env.ops.bracket(f, h)) * Rational(s);
      t.expect(lhs == rhs, [&] { return show_triple(f, g, h); });
    }
    return t.done();
  });
  add("poisson.jacobi", [](const Env& env, std::mt19937_64& rng) {
    Tally t("poisson.jacobi");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng), h = env.pure(rng);
      const int s = sign_of(*f.parity() * *g.parity());
      const auto lhs = env.ops.bracket(f, env.ops.bracket(g, h));
      const auto rhs = env.ops.bracket(env.ops.bracket(f, g), h) +
                       env.ops.bracket(g, env.ops.bracket(f, h)) * Rational(s);
      t.expect(lhs == rhs, [&] { return show_triple(f, g, h); });
    }
    return t.done();
  });

  // -- star product ---------------------------------------------------------
  add("star.generator_table", [](const Env& env, std::mt19937_64&) {
    Tally t("star.generator_table");
    const auto& sig = *env.sig;
    for (int i = 1; i <= sig.n; ++i) {
      const auto pi = env.var(p(i)), qi = env.var(q(i));
      const auto got = env.ops.star(pi, qi) - env.ops.star(qi, pi);
      t.expect(got == env.hbar(), [&] { return "[p,q] = " + show(got); });
    }
    for (int i = 1; i <= sig.r(); ++i) {
      const auto ti = env.var(theta(i));
      const auto got = env.ops.star(ti, ti);
      const auto want = env.hbar() * make_rational(-sig.epsilons[static_cast<std::size_t>(i - 1)], 2);
      t.expect(got == want, [&] { return "t" + std::to_string(i) + "*t" + std::to_string(i) + " = " + show(got); });
      for (int j = i + 1; j <= sig.r(); ++j) {
        const auto tj = env.var(theta(j));
        const auto anti = env.ops.star(ti, tj) + env.ops.star(tj, ti);
        t.expect(anti.is_zero(), [&] { return "anticommutator = " + show(anti); });
      }
    }
    return t.done();
  });
  add("star.associativity", [](const Env& env, std::mt19937_64& rng) {
    Tally t("star.associativity");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng), h = env.pure(rng);
      t.expect(env.ops.star(env.ops.star(f, g), h) == env.ops.star(f, env.ops.star(g, h)),
               [&] { return show_triple(f, g, h); });
    }
    return t.done();
  });
  add("star.unit", [](const Env& env, std::mt19937_64& rng) {
    Tally t("star.unit");
    const auto one = SuperPolynomial::constant(env.sig, 1);
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng);
      t.expect(env.ops.star(one, f) == f && env.ops.star(f, one) == f,
               [&] { return "f = " + show(f); });
    }
    return t.done();
  });
  add("star.classical_limit", [](const Env& env, std::mt19937_64& rng) {
    Tally t("star.classical_limit");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng);
      t.expect(classical_limit(env.ops.star(f, g)) == env.ops.mul(f, g),
               [&] { return show_pair(f, g); });
    }
    return t.done();
  });
  add("star.first_order_is_half_bracket", [](const Env& env, std::mt19937_64& rng) {
    Tally t("star.first_order_is_half_bracket");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng);
      t.expect(env.ops.star(f, g).hbar_coefficient(1) == env.ops.bracket(f, g) * make_rational(1, 2),
               [&] { return show_pair(f, g); });
    }
    return t.done();
  });
  add("star.bd1_defect_divisible_by_hbar2", [](const Env& env, std::mt19937_64& rng) {
    Tally t("star.bd1_defect_divisible_by_hbar2");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng);
      const auto defect = env.ops.commutator(f, g) - env.hbar() * env.ops.bracket(f, g);
      t.expect(divisible_by_hbar(defect, 2), [&] { return show_pair(f, g) + ", defect = " + show(defect); });
    }
    return t.done();
  });
  add("star.parity", [](const Env& env, std::mt19937_64& rng) {
    Tally t("star.parity");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng);
      const auto prod = env.ops.star(f, g);
      const auto par = prod.parity();
      t.expect(prod.is_zero() || (par && *par == ((*f.parity() + *g.parity()) & 1)),
               [&] { return show_pair(f, g); });
    }
    return t.done();
  });

  // -- Weyl / Clifford --------------------------------------------------------
  add("weyl.iso_check", [](const Env& env, std::mt19937_64&) {
    Tally t("weyl.iso_check");
    const std::size_t letters = static_cast<std::size_t>(env.sig->generator_count());
    const std::size_t max_len = letters <= 4 ? 4 : (letters <= 6 ? 3 : 2);
    const auto words = all_words(*env.sig, max_len);
    for (const auto& w : words) {
      auto rewritten = to_star_basis(normal_order(env.sig, w));
      SuperPolynomial starred = SuperPolynomial::constant(env.sig, 1);
      for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        starred = env.ops.star(env.var(*it), starred);
      }
      t.expect(rewritten == starred, [&] {
        return "word " + to_string(w) + ": rewriting " + show(rewritten) + " vs star " + show(starred);
      });
    }
    return t.done();
  });
  add("weyl.confluence", [](const Env& env, std::mt19937_64& rng) {
    Tally t("weyl.confluence");
    const auto vars = generators(*env.sig);
    if (vars.empty()) return t.done();
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    for (int k = 0; k < env.cases; ++k) {
      GeneratorWord w;
      const int len = std::uniform_int_distribution<int>(0, 6)(rng);
      for (int i = 0; i < len; ++i) w.letters.push_back(vars[pick(rng)]);
      const auto leftmost = normal_order(env.sig, w);
      const auto random = normal_order(env.sig, w, RewriteStrategy::kRandom, &rng);
      t.expect(leftmost == random, [&] { return "word " + to_string(w); });
    }
    return t.done();
  });
  add("weyl.sector_decoupling", [](const Env& env, std::mt19937_64& rng) {
    Tally t("weyl.sector_decoupling");
    const auto& sig = *env.sig;
    for (int k = 0; k < env.cases; ++k) {
      GeneratorWord even_word, odd_word;
      const int len = std::uniform_int_distribution<int>(1, 5)(rng);
      for (int i = 0; i < len; ++i) {
        if (sig.n > 0) {
          const int idx = std::uniform_int_distribution<int>(1, sig.n)(rng);
          even_word.letters.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? p(idx) : q(idx));
        }
        if (sig.r() > 0) {
          odd_word.letters.push_back(theta(std::uniform_int_distribution<int>(1, sig.r())(rng)));
        }
      }
      const auto even_nf = normal_order(env.sig, even_word).pbw;
      const auto odd_nf = normal_order(env.sig, odd_word).pbw;
      bool ok = true;
      for (const auto& [m, c] : even_nf.terms()) ok = ok && m.odd == 0;
      for (const auto& [m, c] : odd_nf.terms()) {
        for (auto e : m.even) ok = ok && e == 0;
      }
      t.expect(ok, [&] { return "words " + to_string(even_word) + " / " + to_string(odd_word); });
    }
    return t.done();
  });
  add("weyl.rewrite_mul_matches_star", [](const Env& env, std::mt19937_64& rng) {
    Tally t("weyl.rewrite_mul_matches_star");
    RandomPolynomialSpec spec;
    spec.max_degree = std::min(env.degree, 3);
    spec.max_terms = 3;
    spec.include_hbar = true;
    for (int k = 0; k < env.cases; ++k) {
      NormalOrderedElement x{random_polynomial(rng, env.sig, spec)};
      NormalOrderedElement y{random_polynomial(rng, env.sig, spec)};
      NormalOrderedElement z{random_polynomial(rng, env.sig, spec)};
      const auto xy = rewrite_mul(x, y);
      bool ok = to_star_basis(xy) == env.ops.star(to_star_basis(x), to_star_basis(y));
      ok = ok && rewrite_mul(xy, z) == rewrite_mul(x, rewrite_mul(y, z));
      ok = ok && from_star_basis(to_star_basis(x)) == x;
      t.expect(ok, [&] { return show_triple(x.pbw, y.pbw, z.pbw); });
    }
    return t.done();
  });

  // -- symplectic linear algebra ---------------------------------------------
  add("sp.worked_members", [](const Env&, std::mt19937_64&) {
    Tally t("sp.worked_members");
    auto check = [&](const Signature& s, const RationalMatrix& full, bool expected, const char* what) {
      auto sig = make_signature(s);
      PoissonContext ctx(sig);
      t.expect(is_sp_member(ctx, SuperMatrix::from_rational(sig, full)) == expected,
               [&] { return std::string(what); });
    };
    const auto r = [](long a, long b) { return make_rational(a, b); };
    check(Signature::standard(1, 0, 0), {{1, 0}, {0, 1}}, true, "identity");
    check(Signature::standard(1, 0, 0), {{1, 1}, {0, 1}}, true, "shear");
    check(Signature::standard(0, 2, 0), {{r(3, 5), r(4, 5)}, {r(-4, 5), r(3, 5)}}, true, "rotation");
    check(Signature::standard(0, 1, 1), {{r(5, 4), r(3, 4)}, {r(3, 4), r(5, 4)}}, true, "boost");
    check(Signature::standard(1, 0, 0), {{1, 1}, {r(1, 3), 1}}, false, "perturbed shear");
    return t.done();
  });
  add("sp.super_transpose_order_four", [](const Env& env, std::mt19937_64& rng) {
    Tally t("sp.super_transpose_order_four");
    Signature s = *env.sig;
    s.aux = std::max(s.aux, 3);
    auto sig = make_signature(Signature::with_epsilons(s.n, s.epsilons, s.aux));
    for (int k = 0; k < env.cases; ++k) {
      const auto m = random_parity_matrix(rng, sig);
      const auto twice = super_transpose(super_transpose(m));
      const auto four = super_transpose(super_transpose(twice));
      bool ok = four == m;
      // Twice: [[A, -B], [-C, D]].
      const int even = m.even_dim();
      for (int i = 0; i < m.dim() && ok; ++i) {
        for (int j = 0; j < m.dim() && ok; ++j) {
          const bool off = (i < even) != (j < even);
          ok = twice.at(i, j) == (off ? -m.at(i, j) : m.at(i, j));
        }
      }
      t.expect(ok, [] { return std::string("random parity-disciplined matrix"); });
    }
    return t.done();
  });
  add("sp.group_closure", [](const Env& env, std::mt19937_64& rng) {
    Tally t("sp.group_closure");
    for (int k = 0; k < env.cases; ++k) {
      const auto a = random_sp_member(rng, env.sig);
      const auto b = random_sp_member(rng, env.sig);
      const auto inv = inverse(a);
      bool ok = is_sp_member(env.ops.ctx.poisson, a * b) && is_sp_member(env.ops.ctx.poisson, inv) &&
                a * inv == SuperMatrix::identity(env.sig);
      t.expect(ok, [] { return std::string("random member pair"); });
    }
    return t.done();
  });
  add("sp.invariance", [](const Env& env, std::mt19937_64& rng) {
    Tally t("sp.invariance");
    for (int k = 0; k < env.cases; ++k) {
      const auto m = random_sp_member(rng, env.sig, 3);
      auto f = env.pure(rng, std::min(env.degree, 3)), g = env.pure(rng, std::min(env.degree, 3));
      const auto& ctx = env.ops.ctx;
      const auto mf = act(ctx, m, f), mg = act(ctx, m, g);
      bool ok = act(ctx, m, env.ops.star(f, g)) == env.ops.star(mf, mg);
      ok = ok && act(ctx, m, env.ops.bracket(f, g)) == env.ops.bracket(mf, mg);
      t.expect(ok, [&] { return show_pair(f, g); });
    }
    return t.done();
  });
  add("sp.lie_members_induce_poisson_derivations", [](const Env& env, std::mt19937_64& rng) {
    Tally t("sp.lie_members_induce_poisson_derivations");
    for (int k = 0; k < env.cases; ++k) {
      const auto x = random_sp_lie_member(rng, env.sig);
      std::vector<std::pair<SuperPolynomial, SuperPolynomial>> samples;
      for (int s = 0; s < 3; ++s) samples.emplace_back(env.pure(rng), env.pure(rng));
      bool ok = is_sp_lie_member(env.ops.ctx.poisson, x) &&
                is_poisson_derivation(env.ops.ctx.poisson, induced_vector_field(x), samples);
      t.expect(ok, [] { return std::string("random Lie algebra element"); });
    }
    return t.done();
  });

  // -- formal geometry ---------------------------------------------------------
  add("geometry.hamiltonian_lie_map", [](const Env& env, std::mt19937_64& rng) {
    Tally t("geometry.hamiltonian_lie_map");
    const auto& ctx = env.ops.ctx.poisson;
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng), g = env.pure(rng);
      const auto lhs = commutator(hamiltonian_vf(ctx, f), hamiltonian_vf(ctx, g));
      const auto rhs = hamiltonian_vf(ctx, env.ops.bracket(f, g));
      t.expect(lhs == rhs, [&] { return show_pair(f, g); });
    }
    return t.done();
  });
  add("geometry.hamiltonian_fields_are_poisson", [](const Env& env, std::mt19937_64& rng) {
    Tally t("geometry.hamiltonian_fields_are_poisson");
    const auto& ctx = env.ops.ctx.poisson;
    for (int k = 0; k < env.cases; ++k) {
      auto h = env.pure(rng);
      std::vector<std::pair<SuperPolynomial, SuperPolynomial>> samples;
      for (int s = 0; s < 3; ++s) samples.emplace_back(env.pure(rng), env.pure(rng));
      t.expect(is_poisson_derivation(ctx, hamiltonian_vf(ctx, h), samples),
               [&] { return "h = " + show(h); });
    }
    return t.done();
  });
  add("geometry.split_recombine", [](const Env& env, std::mt19937_64& rng) {
    Tally t("geometry.split_recombine");
    const auto vars = generators(*env.sig);
    for (int k = 0; k < env.cases; ++k) {
      std::vector<SuperPolynomial> images;
      const int parity = env.random_parity(rng);
      for (const auto& v : vars) {
        RandomPolynomialSpec spec;
        spec.max_degree = env.degree;
        images.push_back(random_pure_polynomial(rng, env.sig, (parity + (v.is_odd() ? 1 : 0)) & 1, spec));
      }
      FormalVectorField v(env.sig, images);
      const auto split = split_at_origin(v);
      bool ok = recombine(split) == v;
      const Monomial one = Monomial::one(*env.sig);
      for (const auto& image : split.vanishing.images()) ok = ok && sgn(image.coefficient(one)) == 0;
      t.expect(ok, [] { return std::string("random vector field"); });
    }
    return t.done();
  });
  add("geometry.jet_flatness", [](const Env& env, std::mt19937_64& rng) {
    Tally t("geometry.jet_flatness");
    for (int k = 0; k < env.cases; ++k) {
      RandomPolynomialSpec spec;
      spec.max_degree = std::max(env.degree, 1);
      auto f = random_polynomial(rng, env.sig, spec);
      const auto jet = taylor_jet(f, f.max_degree());
      bool ok = is_flat(jet) && restrict_to_base(jet) == f;
      t.expect(ok, [&] { return "f = " + show(f); });
    }
    return t.done();
  });
  add("geometry.jet_multiplicative", [](const Env& env, std::mt19937_64& rng) {
    Tally t("geometry.jet_multiplicative");
    for (int k = 0; k < env.cases; ++k) {
      auto f = env.pure(rng, std::min(env.degree, 3)), g = env.pure(rng, std::min(env.degree, 3));
      const int order = f.max_degree() + g.max_degree();
      const auto lhs = taylor_jet(env.ops.mul(f, g), order);
      const auto rhs = taylor_jet(f, order).poly * taylor_jet(g, order).poly;
      t.expect(lhs.poly == rhs, [&] { return show_pair(f, g); });
    }
    return t.done();
  });

  // -- text surface -------------------------------------------------------------
  add("cli.round_trip", [](const Env& env, std::mt19937_64& rng) {
    Tally t("cli.round_trip");
    Signature s = *env.sig;
    auto sig = make_signature(Signature::with_epsilons(s.n, s.epsilons, std::max(s.aux, 2)));
    for (int k = 0; k < env.cases; ++k) {
      RandomPolynomialSpec spec;
      spec.max_degree = env.degree;
      spec.include_hbar = true;
      auto f = random_polynomial(rng, sig, spec, true);
      const auto text = format_expression(f);
      t.expect(parse_expression(text, sig) == f && format_expression(f) == text,
               [&] { return text; });
    }
    return t.done();
  });
  return checks;
}

}  // namespace

SuiteReport run_invariant_suite(const SuiteConfig& config) {
  Env env{make_signature(config.signature),
          Ops{StarContext(make_signature(config.signature)), config.fault},
          config.degree, config.cases};
  // One signature object shared by every value in the suite.
  env.ops.ctx = StarContext(env.sig);

  const auto checks = all_checks();
  std::vector<CheckOutcome> outcomes(checks.size());
  auto run_one = [&](std::size_t i) {
    std::mt19937_64 rng(config.seed * 1000003ULL + i);
    try {
      return checks[i].second(env, rng);
    } catch (const std::exception& e) {
      return CheckOutcome{checks[i].first, false, 0, std::string("exception: ") + e.what()};
    }
  };
  if (config.parallel) {
    std::vector<std::future<CheckOutcome>> futures;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      futures.push_back(std::async(std::launch::async, run_one, i));
    }
    for (std::size_t i = 0; i < checks.size(); ++i) outcomes[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < checks.size(); ++i) outcomes[i] = run_one(i);
  }
  return SuiteReport{std::move(outcomes)};
}

}  // namespace superstar
