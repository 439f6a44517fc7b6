#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lindex/error.hpp"
#include "lindex/promotion.hpp"
#include "lindex/sieve.hpp"
#include "lindex/verify.hpp"

namespace lindex {
namespace {

Shape rect(int m, int n) { return Shape{std::vector<int>(static_cast<std::size_t>(m), n), false}; }

// Sum of the entries i with i + 1 in a strictly lower row, from row lists.
int oracle_maj(const std::vector<std::vector<int>>& rows) {
  std::map<int, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int v : rows[r]) row_of[v] = r;
  }
  int s = 0;
  for (const auto& [v, r] : row_of) {
    const auto next = row_of.find(v + 1);
    if (next != row_of.end() && next->second > r) s += v;
  }
  return s;
}

TEST(Sieve, HookLengths) {
  EXPECT_EQ(hook_lengths(rect(2, 3)), (std::vector<int>{4, 3, 2, 3, 2, 1}));
  EXPECT_EQ(hook_lengths(Shape{{3, 1}, false}), (std::vector<int>{4, 2, 1, 1}));
  EXPECT_EQ(b_statistic(rect(3, 4)), 12);
}

TEST(Sieve, MajExampleTableau) {
  const auto rows = maj_example_tableau();
  const Shape s = rect(3, 4);
  const LinearExtension f = tableau_from_rows(s, rows);
  EXPECT_EQ(tableau_rows(s, f), rows);
  // Descents at 1, 4, 6, 8 and 11: each i + 1 sits in a lower row.
  EXPECT_EQ(oracle_maj(rows), 30);
  EXPECT_EQ(maj_tableau(s, f), 30);
  EXPECT_THROW(tableau_from_rows(rect(2, 2), {{1, 3}, {4, 2}}), PreconditionError);
}

TEST(Sieve, MajOracleOverAllTableaux) {
  for (const Shape& s : {rect(2, 3), rect(3, 3), Shape{{3, 2, 1}, false}}) {
    for (const auto& f : linear_extensions(shape_poset(s))) {
      EXPECT_EQ(maj_tableau(s, f), oracle_maj(tableau_rows(s, f)));
    }
  }
}

TEST(Sieve, SumRouteEqualsHookRoute) {
  for (const Shape& s : {rect(2, 2), rect(2, 3), rect(2, 4), rect(2, 5), rect(3, 3), rect(3, 4),
                         Shape{{3, 2, 1}, false}, Shape{{4, 2, 1}, false}, Shape{{3, 1, 1}, false}}) {
    const IntPoly sum = F_poly_sum(s);
    EXPECT_EQ(sum, F_poly_hook(s)) << s.to_string();
    EXPECT_EQ(sum.eval(BigInt(1)), count_extensions(shape_poset(s))) << s.to_string();
    EXPECT_EQ(q_hook_poly(s) * IntPoly::monomial(1, b_statistic(s)), sum) << s.to_string();
  }
  EXPECT_EQ(F_poly_sum(rect(2, 2)).to_string(), "q^4+q^2");
}

TEST(Sieve, Cyclotomic) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), (IntPoly{1, 0, 0, 1, 0, 0, 1}));
}

TEST(Sieve, ExactRootEvaluationMatchesFloat) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int p : {2, 3, 4, 6, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      // Build an F whose values at p-th roots are integers: a polynomial in q^p
      // plus a multiple of [p]_q.
      std::vector<BigInt> c(static_cast<std::size_t>(2 * p + 1));
      c[0] = coef(rng);
      c[static_cast<std::size_t>(p)] = coef(rng);
      const int k = coef(rng);
      for (int i = 0; i < p; ++i) c[static_cast<std::size_t>(i)] += k;
      const IntPoly F(c);
      for (long d = 1; d <= p; ++d) {
        const BigInt exact = eval_at_root(F, p, d);
        EXPECT_NEAR(eval_at_root_float(F, p, d), exact.get_d(), 1e-9);
      }
    }
  }
  EXPECT_THROW(eval_at_root(IntPoly{0, 1}, 4, 1), ArithmeticError);
}

TEST(Sieve, FixedPointsOfPromotionPowers) {
  const Poset P = shape_poset(rect(3, 3));
  EXPECT_EQ(fixed_count(P, 9), 42);
  EXPECT_EQ(fixed_count(P, 3), 6);
  EXPECT_EQ(fixed_count(P, 1), 0);
}

TEST(Sieve, RectangleTables) {
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}, {3, 4}}) {
    for (const auto& row : rhoades_check(m, n)) EXPECT_TRUE(row.pass) << m << "x" << n << " d=" << row.d;
  }
  // The maj sum carries q^b; with b odd the value at zeta^(p/2) changes sign.
  const auto rows = rhoades_check(2, 3);
  EXPECT_EQ(rows[2].fixed, 3);
  EXPECT_EQ(rows[2].at_root, -3);
  EXPECT_FALSE(rows[2].pass);
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}}) {
    for (const auto& row : rhoades_check(m, n, SievePoly::QHook)) EXPECT_TRUE(row.pass);
  }
}

TEST(Sieve, ShapeKinds) {
  EXPECT_TRUE(shape_is_kind(rect(2, 3), ShapeKind::Rectangle));
  EXPECT_TRUE(shape_is_kind(Shape{{3, 2, 1}, false}, ShapeKind::Staircase));
  EXPECT_TRUE(shape_is_kind(Shape{{3, 2, 1}, true}, ShapeKind::ShiftedDoubleStaircase));
  EXPECT_TRUE(shape_is_kind(Shape{{4, 2}, true}, ShapeKind::ShiftedTrapezoid));
  EXPECT_FALSE(shape_is_kind(Shape{{3, 2}, true}, ShapeKind::ShiftedTrapezoid));
  EXPECT_EQ(parse_shape_kind(shape_kind_name(ShapeKind::ShiftedTrapezoid)), ShapeKind::ShiftedTrapezoid);
  EXPECT_THROW(special_shape_check(rect(2, 3), ShapeKind::Staircase), PreconditionError);
}

TEST(Sieve, SpecialShapes) {
  for (const Shape& s : {rect(2, 3), rect(2, 4), rect(3, 3)}) {
    const SpecialShapeReport r = special_shape_check(s, ShapeKind::Rectangle);
    EXPECT_TRUE(r.pass()) << s.to_string();
    EXPECT_EQ(r.dihedral_order, 2);
  }
  const SpecialShapeReport st = special_shape_check(Shape{{3, 2, 1}, false}, ShapeKind::Staircase);
  EXPECT_TRUE(st.power_ok);
  EXPECT_EQ(st.dihedral_order, 4);
  // Too small for the generic order: e = 2 and evacuation equals its dual.
  const SpecialShapeReport small = special_shape_check(Shape{{2, 1}, false}, ShapeKind::Staircase);
  EXPECT_TRUE(small.power_ok);
  EXPECT_EQ(small.dihedral_order, 2);
  const SpecialShapeReport sq = special_shape_check(rect(2, 2), ShapeKind::Rectangle);
  EXPECT_EQ(sq.dihedral_order, 1);
}

TEST(Sieve, TransposeMap) {
  const Shape s{{2, 1}, false};
  EXPECT_EQ(transpose_map(s), (std::vector<int>{0, 2, 1}));
}

}  // namespace
}  // namespace lindex
