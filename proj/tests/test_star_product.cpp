#include <gtest/gtest.h>

#include "superstar/errors.hpp"
#include "superstar/poisson.hpp"
#include "superstar/star_product.hpp"
#include "test_support.hpp"

namespace superstar {
namespace {

using testing::fmt;
using testing::poly;
using testing::sig;

// Moyal product for n = 1, no odd variables, written out from the bivector
// d_p (x) d_q - d_q (x) d_p without touching the star code.
SuperPolynomial moyal_reference(const SuperPolynomial& f, const SuperPolynomial& g) {
  const auto& s = f.signature();
  auto d = [](SuperPolynomial x, const Variable& v, int times) {
    for (int i = 0; i < times; ++i) x = partial_derivative(x, v);
    return x;
  };
  const int top = f.max_degree() + g.max_degree();
  SuperPolynomial out(s);
  Rational weight = 1;
  for (int k = 0; k <= top; ++k) {
    Rational binom = 1;
    for (int j = 0; j <= k; ++j) {
      SuperPolynomial lhs = d(d(f, p(1), k - j), q(1), j);
      SuperPolynomial rhs = d(d(g, q(1), k - j), p(1), j);
      Rational c = weight * binom * (j % 2 ? -1 : 1);
      out += multiply(lhs, rhs) * SuperPolynomial::hbar(s, static_cast<unsigned>(k)) * c;
      binom = binom * (k - j) / (j + 1);
    }
    weight = weight / 2 / (k + 1);
  }
  return out;
}

TEST(Star, GeneratorTable) {
  auto s = sig(1, 1, 1);
  StarContext ctx(s);
  EXPECT_EQ(fmt(star(ctx, poly(s, "p1"), poly(s, "q1"))), "p1*q1 + 1/2*h");
  EXPECT_EQ(fmt(star(ctx, poly(s, "q1"), poly(s, "p1"))), "p1*q1 - 1/2*h");
  EXPECT_EQ(fmt(star(ctx, poly(s, "t1"), poly(s, "t2"))), "t1*t2");
  EXPECT_EQ(fmt(star(ctx, poly(s, "t1"), poly(s, "t1"))), "-1/2*h");
  EXPECT_EQ(fmt(star(ctx, poly(s, "t2"), poly(s, "t2"))), "1/2*h");
}

TEST(Star, Unit) {
  auto s = sig(1, 1, 1);
  StarContext ctx(s);
  auto f = poly(s, "p1^2*t1 + q1*t2 - 3*h");
  auto one = poly(s, "1");
  EXPECT_EQ(star(ctx, one, f), f);
  EXPECT_EQ(star(ctx, f, one), f);
}

TEST(Star, MatchesMoyalReference) {
  auto s = sig(1, 0, 0);
  StarContext ctx(s);
  for (const char* a : {"p1^2*q1", "p1^3 + q1", "q1^2*p1 - 2*p1"}) {
    for (const char* b : {"p1*q1^2", "q1^3", "p1 + h*q1^2"}) {
      EXPECT_EQ(star(ctx, poly(s, a), poly(s, b)), moyal_reference(poly(s, a), poly(s, b)))
          << a << " * " << b;
    }
  }
}

TEST(Star, SignatureMismatchThrows) {
  StarContext ctx(sig(1, 0, 0));
  EXPECT_THROW(star(ctx, poly(sig(1, 0, 0), "p1"), poly(sig(1, 1, 0), "q1")),
               SignatureMismatch);
}

TEST(Star, Truncation) {
  auto s = sig(1, 0, 0);
  StarContext ctx(s, TruncationPolicy{std::nullopt, 0u});
  EXPECT_EQ(fmt(star(ctx, poly(s, "p1"), poly(s, "q1"))), "p1*q1");
  StarContext by_degree(s, TruncationPolicy{1, std::nullopt});
  EXPECT_EQ(fmt(star(by_degree, poly(s, "p1"), poly(s, "q1"))), "1/2*h");
}

TEST(StarCommutator, Examples) {
  auto s = sig(1, 1, 0);
  StarContext ctx(s);
  EXPECT_EQ(fmt(star_commutator(ctx, poly(s, "p1"), poly(s, "q1"))), "h");
  // Graded commutator of odd elements is the anticommutator.
  EXPECT_EQ(fmt(star_commutator(ctx, poly(s, "t1"), poly(s, "t1"))), "-1*h");
  EXPECT_EQ(fmt(star_commutator(ctx, poly(s, "p1"), poly(s, "p1"))), "0");
}

TEST(ClassicalLimit, DropsHbar) {
  auto s = sig(1, 0, 0);
  EXPECT_EQ(fmt(classical_limit(poly(s, "p1*q1 + h/2"))), "p1*q1");
  EXPECT_EQ(fmt(classical_limit(poly(s, "h^3"))), "0");
  EXPECT_EQ(fmt(classical_limit(poly(s, "p1 + h*q1"))), "p1");
}

TEST(Bd1Defect, Generators) {
  auto s = sig(1, 1, 0);
  StarContext ctx(s);
  EXPECT_TRUE(bd1_defect(ctx, poly(s, "p1"), poly(s, "q1")).is_zero());
  EXPECT_TRUE(bd1_defect(ctx, poly(s, "t1"), poly(s, "t1")).is_zero());
}

TEST(Bd1Defect, CubicPair) {
  auto s = sig(1, 0, 0);
  StarContext ctx(s);
  // Only the third-order bivector term survives the commutator:
  // 2 (hbar/2)^3 / 3! * (-3 * 2 * 2) = -hbar^3 / 2.
  auto defect = bd1_defect(ctx, poly(s, "p1^2*q1"), poly(s, "p1*q1^2"));
  EXPECT_TRUE(divisible_by_hbar(defect, 2));
  EXPECT_EQ(fmt(defect), "-1/2*h^3");
  auto f = poly(s, "p1^2*q1");
  auto g = poly(s, "p1*q1^2");
  auto reference = moyal_reference(f, g) - moyal_reference(g, f) -
                   SuperPolynomial::hbar(s) * poisson_bracket(ctx.poisson, f, g);
  EXPECT_EQ(defect, reference);
}

TEST(Bd1Bracket, RecoversPoissonAtLeadingOrder) {
  auto s = sig(1, 1, 1);
  StarContext ctx(s);
  auto f = poly(s, "p1^2*q1");
  auto g = poly(s, "q1*t1");
  EXPECT_EQ(classical_limit(bd1_bracket(ctx, f, g)), poisson_bracket(ctx.poisson, f, g));
}

}  // namespace
}  // namespace superstar
