#include <gtest/gtest.h>

#include "superstar/errors.hpp"
#include "superstar/polynomial.hpp"
#include "test_support.hpp"

namespace superstar {
namespace {

using testing::fmt;
using testing::poly;
using testing::sig;

TEST(Multiply, OddVariablesAnticommute) {
  auto s = sig(1, 2, 0);
  auto t1 = SuperPolynomial::variable(s, theta(1));
  auto t2 = SuperPolynomial::variable(s, theta(2));
  EXPECT_EQ(fmt(t1 * t2), "t1*t2");
  EXPECT_EQ(fmt(t2 * t1), "-1*t1*t2");
  EXPECT_TRUE((t1 * t1).is_zero());
}

TEST(Multiply, MixedExpansionMatchesTermByTerm) {
  auto s = sig(1, 2, 0);
  auto lhs = poly(s, "p1 + t1");
  auto rhs = poly(s, "q1 + t2");
  // Expanded by hand: p1 q1 + p1 t2 + t1 q1 + t1 t2, and t1 q1 = q1 t1.
  SuperPolynomial expected(s);
  auto v = [&](Variable x) { return SuperPolynomial::variable(s, x); };
  expected += v(p(1)) * v(q(1));
  expected += v(p(1)) * v(theta(2));
  expected += v(q(1)) * v(theta(1));
  expected += v(theta(1)) * v(theta(2));
  EXPECT_EQ(multiply(lhs, rhs), expected);
  EXPECT_EQ(fmt(multiply(lhs, rhs)), "p1*q1 + p1*t2 + q1*t1 + t1*t2");
}

TEST(Multiply, KoszulSignOnLongerProducts) {
  auto s = sig(0, 3, 0);
  // t3 t2 t1 is an odd permutation of t1 t2 t3.
  EXPECT_EQ(fmt(poly(s, "t3*t2*t1")), "-1*t1*t2*t3");
  EXPECT_EQ(fmt(poly(s, "t2*t3*t1")), "t1*t2*t3");
}

TEST(Multiply, SignatureMismatchThrows) {
  auto a = sig(1, 0, 0);
  auto b = sig(1, 1, 0);
  EXPECT_THROW(SuperPolynomial::variable(a, p(1)) * SuperPolynomial::variable(b, p(1)),
               SignatureMismatch);
  EXPECT_THROW(SuperPolynomial::variable(a, p(1)) + SuperPolynomial::variable(b, p(1)),
               SignatureMismatch);
}

TEST(Multiply, EqualSignaturesFromDistinctPointersAgree) {
  auto a = sig(1, 1, 0);
  auto b = sig(1, 1, 0);
  EXPECT_NO_THROW(SuperPolynomial::variable(a, p(1)) * SuperPolynomial::variable(b, q(1)));
}

TEST(PartialDerivative, EvenCalculus) {
  auto s = sig(1, 0, 0);
  EXPECT_EQ(fmt(partial_derivative(poly(s, "p1^2*q1"), p(1))), "2*p1*q1");
  EXPECT_EQ(fmt(partial_derivative(poly(s, "q1^3 + 7"), q(1))), "3*q1^2");
  EXPECT_TRUE(partial_derivative(poly(s, "q1"), p(1)).is_zero());
}

TEST(PartialDerivative, LeftDerivativeSigns) {
  auto s = sig(0, 2, 0);
  // t1 t2 = -t2 t1, deleting the leading t2 leaves -t1.
  EXPECT_EQ(fmt(partial_derivative(poly(s, "t1*t2"), theta(2))), "-1*t1");
  EXPECT_EQ(fmt(partial_derivative(poly(s, "t1*t2"), theta(1))), "t2");
  EXPECT_TRUE(partial_derivative(poly(s, "t1"), theta(2)).is_zero());
}

TEST(PartialDerivative, OutOfRangeVariableThrows) {
  auto s = sig(1, 1, 0);
  EXPECT_THROW(partial_derivative(poly(s, "p1"), theta(2)), MathError);
  EXPECT_THROW(partial_derivative(poly(s, "p1"), q(2)), MathError);
}

TEST(SubstituteLinear, SwapWithSign) {
  auto s = sig(1, 0, 0);
  std::map<Variable, SuperPolynomial> images{{p(1), poly(s, "q1")}, {q(1), poly(s, "-p1")}};
  EXPECT_EQ(fmt(substitute_linear(poly(s, "p1*q1"), images)), "-1*p1*q1");
}

TEST(SubstituteLinear, IdentityIsNoOp) {
  auto s = sig(1, 2, 0);
  auto f = poly(s, "p1^2*t1 - 3*q1*t1*t2 + h");
  std::map<Variable, SuperPolynomial> images;
  for (const auto& v : generators(*s)) images.emplace(v, SuperPolynomial::variable(s, v));
  EXPECT_EQ(substitute_linear(f, images), f);
  EXPECT_EQ(substitute_linear(f, {}), f);
}

TEST(SubstituteLinear, AuxOddShift) {
  auto s = sig(0, 1, 0, 1);
  std::map<Variable, SuperPolynomial> images{{theta(1), poly(s, "t1 + x1")}};
  EXPECT_EQ(fmt(substitute_linear(poly(s, "t1"), images)), "t1 + x1");
}

TEST(SubstituteLinear, ParityViolationThrows) {
  auto s = sig(1, 1, 0);
  std::map<Variable, SuperPolynomial> odd_for_even{{p(1), poly(s, "t1")}};
  EXPECT_THROW(substitute_linear(poly(s, "p1"), odd_for_even), ParityError);
  std::map<Variable, SuperPolynomial> mixed{{theta(1), poly(s, "t1 + p1")}};
  EXPECT_THROW(substitute_linear(poly(s, "t1"), mixed), ParityError);
}

TEST(Truncate, DegreeAndHbar) {
  auto s = sig(1, 0, 0);
  EXPECT_EQ(fmt(truncate(poly(s, "p1^3 + p1"), {2, std::nullopt})), "p1");
  EXPECT_EQ(fmt(truncate(poly(s, "h^2*p1 + h*q1"), {std::nullopt, 1u})), "q1*h");
  auto f = poly(s, "p1*q1 + h");
  EXPECT_EQ(truncate(f, {}), f);
}

TEST(Hbar, DivisionIsExact) {
  auto s = sig(1, 0, 0);
  auto f = poly(s, "h^2*p1 + 3*h^3");
  EXPECT_TRUE(divisible_by_hbar(f, 2));
  EXPECT_FALSE(divisible_by_hbar(f, 3));
  EXPECT_EQ(fmt(divide_by_hbar(f, 2)), "p1 + 3*h");
  EXPECT_THROW(divide_by_hbar(f, 3), MathError);
}

TEST(Polynomial, ParityInspection) {
  auto s = sig(1, 2, 0);
  EXPECT_EQ(poly(s, "p1*t1*t2").parity(), 0);
  EXPECT_EQ(poly(s, "q1*t2").parity(), 1);
  EXPECT_EQ(SuperPolynomial(s).parity(), 0);
  EXPECT_FALSE(poly(s, "p1 + t1").parity().has_value());
  auto [even, odd] = poly(s, "p1 + t1 + t1*t2").split_by_parity();
  EXPECT_EQ(fmt(even), "p1 + t1*t2");
  EXPECT_EQ(fmt(odd), "t1");
}

TEST(Polynomial, EmptySignature) {
  auto s = sig(0, 0, 0);
  EXPECT_TRUE(generators(*s).empty());
  auto f = poly(s, "2 + h");
  EXPECT_EQ(fmt(f * f), "4 + 4*h + h^2");
  EXPECT_THROW(poly(s, "p1"), ParseError);
}

TEST(Polynomial, TooManyOddVariablesRejected) {
  EXPECT_THROW(make_signature(Signature::standard(0, 40, 20, 10)), MathError);
}

TEST(Polynomial, PowerOfMixed) {
  auto s = sig(1, 1, 0);
  // (p1 + t1)^3 = p1^3 + 3 p1^2 t1 since t1^2 = 0.
  EXPECT_EQ(fmt(power(poly(s, "p1 + t1"), 3)), "p1^3 + 3*p1^2*t1");
  EXPECT_EQ(fmt(power(poly(s, "p1"), 0)), "1");
}

}  // namespace
}  // namespace superstar
