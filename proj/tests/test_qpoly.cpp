#include <gtest/gtest.h>

#include <random>

#include "lindex/error.hpp"
#include "lindex/qpoly.hpp"

namespace lindex {
namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(c);
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  IntPoly den;
  do den = random_poly(rng, 2);
  while (den.is_zero());
  return RatFunc(random_poly(rng, 3), den);
}

TEST(IntPoly, ArithmeticAndEvaluation) {
  const IntPoly a{1, 1};   // 1 + x
  const IntPoly b{-1, 1};  // -1 + x
  EXPECT_EQ(a * b, (IntPoly{-1, 0, 1}));
  EXPECT_EQ((a * b).eval(BigInt(3)), 8);
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(a.pow(3), (IntPoly{1, 3, 3, 1}));
  EXPECT_EQ((IntPoly{2, 4}).content(), 2);
  EXPECT_EQ((IntPoly{1, 0, 1}).substitute_power(2), (IntPoly{1, 0, 0, 0, 1}));
  EXPECT_EQ((IntPoly{1, 0, 1}).to_string(), "q^2+1");
}

TEST(IntPoly, ExactDivision) {
  const IntPoly a{-1, 0, 1};
  EXPECT_EQ(divexact(a, IntPoly{1, 1}), (IntPoly{-1, 1}));
  EXPECT_THROW(divexact(a, IntPoly{2, 1}), ArithmeticError);
  const auto [q, r] = divmod_monic(IntPoly{1, 2, 3, 1}, IntPoly{1, 1});
  EXPECT_EQ(q * IntPoly({1, 1}) + r, (IntPoly{1, 2, 3, 1}));
  EXPECT_LE(r.degree(), 0);
}

TEST(IntPoly, RootMultiplicity) {
  const IntPoly f = IntPoly{-1, 1}.pow(3) * IntPoly{1, 0, 1};
  EXPECT_EQ(f.multiplicity_of_root(BigInt(1)), 3);
  EXPECT_EQ(f.multiplicity_of_root(BigInt(-1)), 0);
}

TEST(RatFunc, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    const RatFunc a = random_ratfunc(rng);
    const RatFunc b = random_ratfunc(rng);
    const RatFunc c = random_ratfunc(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a + RatFunc(0), a);
    EXPECT_EQ(a * RatFunc(1), a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
      EXPECT_EQ(b / b, RatFunc(1));
    }
  }
}

TEST(RatFunc, CanonicalForm) {
  const RatFunc a(IntPoly{-2, 2}, IntPoly{2, 2});
  EXPECT_EQ(a, parse_ratfunc("(q-1)/(q+1)"));
  EXPECT_EQ(RatFunc(IntPoly{3, 3}, IntPoly{-6, -6}), RatFunc(Rat(-1, 2)));
  EXPECT_TRUE(RatFunc(IntPoly{}, IntPoly{1, 1}).is_zero());
  EXPECT_THROW(RatFunc(IntPoly{1}, IntPoly{}), ArithmeticError);
}

TEST(RatFunc, DisplayRoundTrips) {
  for (const char* text : {"(q-1)^2/(q+1)^2", "-2*(q-1)^3/(q+1)^4", "0", "1", "4*q*(q-1)^2/(q+1)^4"}) {
    const RatFunc f = parse_ratfunc(text);
    EXPECT_EQ(parse_ratfunc(f.display()), f) << text;
  }
  EXPECT_EQ(parse_ratfunc("-16q(q-1)(q^2+1)/(q+1)^6"),
            RatFunc(IntPoly{0, -1, 1} * IntPoly{1, 0, 1}, IntPoly{1, 1}.pow(6), Rat(16)) * RatFunc(-1));
}

TEST(RatFunc, EvaluationAndOrderAtOne) {
  const RatFunc f = parse_ratfunc("(q-1)^3*(q^2+1)/(q+1)^2");
  EXPECT_EQ(f.order_at_one(), 3);
  EXPECT_TRUE(f.divisible_by_qm1(3));
  EXPECT_FALSE(f.divisible_by_qm1(4));
  EXPECT_TRUE(f.denominator_is_power_of_qp1());
  EXPECT_EQ(f.eval(Rat(2)), Rat(5, 9));
  EXPECT_THROW(f.eval(Rat(-1)), ArithmeticError);
  EXPECT_EQ(RatFunc(0).order_at_one(), -1);
}

TEST(RatFunc, ParseErrors) {
  EXPECT_THROW(parse_ratfunc("(q-1"), ParseError);
  EXPECT_THROW(parse_ratfunc("q^"), ParseError);
  EXPECT_THROW(parse_ratfunc("z+1"), ParseError);
}

}  // namespace
}  // namespace lindex
