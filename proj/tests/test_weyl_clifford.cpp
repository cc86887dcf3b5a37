#include <gtest/gtest.h>

#include <random>

#include "superstar/errors.hpp"
#include "superstar/star_product.hpp"
#include "superstar/weyl_clifford.hpp"
#include "test_support.hpp"

namespace superstar {
namespace {

using testing::fmt;
using testing::poly;
using testing::sig;

GeneratorWord word(std::vector<Variable> letters) { return {std::move(letters), 0, 1}; }

TEST(NormalOrder, HeisenbergRelation) {
  auto s = sig(1, 1, 0);
  auto qp = normal_order(s, word({q(1), p(1)}));
  auto pq = normal_order(s, word({p(1), q(1)}));
  EXPECT_EQ(fmt(qp.pbw), "p1*q1 - h");
  EXPECT_EQ(fmt(pq.pbw - qp.pbw), "h");
}

TEST(NormalOrder, CliffordSquare) {
  auto s = sig(1, 1, 1);
  EXPECT_EQ(fmt(normal_order(s, word({theta(1), theta(1)})).pbw), "-1/2*h");
  EXPECT_EQ(fmt(normal_order(s, word({theta(2), theta(2)})).pbw), "1/2*h");
  EXPECT_EQ(fmt(normal_order(s, word({theta(2), theta(1)})).pbw), "-1*t1*t2");
}

TEST(NormalOrder, CommutingLetters) {
  auto s = sig(2, 0, 0);
  EXPECT_EQ(fmt(normal_order(s, word({p(1), p(1)})).pbw), "p1^2");
  EXPECT_EQ(fmt(normal_order(s, word({q(2), p(1)})).pbw), "p1*q2");
}

TEST(NormalOrder, EmptyWordIsUnit) {
  auto s = sig(1, 1, 0);
  EXPECT_EQ(fmt(normal_order(s, GeneratorWord{}).pbw), "1");
}

TEST(NormalOrder, CoefficientAndHbarCarry) {
  auto s = sig(1, 0, 0);
  GeneratorWord w{{q(1), p(1)}, 1, make_rational(3, 2)};
  EXPECT_EQ(fmt(normal_order(s, w).pbw), "3/2*p1*q1*h - 3/2*h^2");
}

TEST(NormalOrder, AuxLettersRejected) {
  auto s = sig(1, 0, 0, 1);
  EXPECT_THROW(normal_order(s, word({xi(1)})), MathError);
}

TEST(NormalOrder, RandomStrategyIsConfluent) {
  auto s = sig(1, 1, 1);
  std::mt19937_64 rng(7);
  const auto words = all_words(*s, 4);
  for (std::size_t i = 0; i < words.size(); i += 7) {
    auto left = normal_order(s, words[i]);
    for (int trial = 0; trial < 3; ++trial) {
      EXPECT_EQ(normal_order(s, words[i], RewriteStrategy::kRandom, &rng), left)
          << to_string(words[i]);
    }
  }
  EXPECT_THROW(normal_order(s, words[1], RewriteStrategy::kRandom, nullptr), MathError);
}

TEST(RewriteMul, Examples) {
  auto s = sig(1, 2, 0);
  auto pe = normal_order(s, word({p(1)}));
  auto qe = normal_order(s, word({q(1)}));
  auto product = rewrite_mul(pe, qe);
  EXPECT_EQ(fmt(product.pbw), "p1*q1");
  // The PBW word p1 q1 corresponds to p1 * q1 in the star algebra.
  StarContext ctx(s);
  EXPECT_EQ(to_star_basis(product), star(ctx, poly(s, "p1"), poly(s, "q1")));

  auto unit = normal_order(s, GeneratorWord{});
  EXPECT_EQ(rewrite_mul(unit, product), product);
  EXPECT_EQ(rewrite_mul(product, unit), product);

  auto t1 = normal_order(s, word({theta(1)}));
  auto t2 = normal_order(s, word({theta(2)}));
  EXPECT_EQ(fmt(rewrite_mul(t1, t2).pbw), "t1*t2");
  EXPECT_EQ(fmt(rewrite_mul(t2, t1).pbw), "-1*t1*t2");
}

TEST(RewriteMul, Associative) {
  auto s = sig(1, 1, 0);
  auto a = normal_order(s, word({q(1), p(1), theta(1)}));
  auto b = normal_order(s, word({q(1), theta(1)}));
  auto c = normal_order(s, word({p(1), p(1)}));
  EXPECT_EQ(rewrite_mul(rewrite_mul(a, b), c), rewrite_mul(a, rewrite_mul(b, c)));
}

TEST(StarBasis, ClosedFormAndInverse) {
  auto s = sig(1, 0, 0);
  // p^2 q^2 in PBW order is p^2 * q^2 = p^2 q^2 + 2 hbar p q + hbar^2 / 2.
  NormalOrderedElement x{poly(s, "p1^2*q1^2")};
  EXPECT_EQ(fmt(to_star_basis(x)), "p1^2*q1^2 + 2*p1*q1*h + 1/2*h^2");
  StarContext ctx(s);
  auto pp = star(ctx, poly(s, "p1"), poly(s, "p1"));
  auto qq = star(ctx, poly(s, "q1"), poly(s, "q1"));
  EXPECT_EQ(to_star_basis(x), star(ctx, pp, qq));
  EXPECT_EQ(from_star_basis(to_star_basis(x)), x);
  auto f = poly(s, "p1*q1^3 - 2*h*q1 + 5");
  EXPECT_EQ(to_star_basis(from_star_basis(f)), f);
}

TEST(IsoCheck, ShortWords) {
  auto s = sig(1, 1, 0);
  StarContext ctx(s);
  auto words = all_words(*s, 2);
  EXPECT_EQ(words.size(), 1u + 3u + 9u);
  auto report = iso_check(ctx, words);
  EXPECT_EQ(report.checked, words.size());
  EXPECT_TRUE(report.ok());
}

TEST(IsoCheck, EmptyWordAndTripleTheta) {
  auto s = sig(1, 1, 0);
  StarContext ctx(s);
  auto report = iso_check(ctx, {GeneratorWord{}, word({theta(1), theta(1), theta(1)})});
  EXPECT_TRUE(report.ok());
  auto rewritten = to_star_basis(normal_order(s, word({theta(1), theta(1), theta(1)})));
  EXPECT_EQ(fmt(rewritten), "-1/2*t1*h");
  auto t1 = poly(s, "t1");
  EXPECT_EQ(star(ctx, t1, star(ctx, t1, t1)), rewritten);
}

TEST(IsoCheck, DetectsWrongIdentification) {
  auto s = sig(1, 0, 0);
  StarContext ctx(s);
  // Reading the PBW result directly as a polynomial misses the symmetrization.
  auto pbw = normal_order(s, word({p(1), q(1)})).pbw;
  EXPECT_NE(pbw, star(ctx, poly(s, "p1"), poly(s, "q1")));
}

}  // namespace
}  // namespace superstar
