#include <gtest/gtest.h>

#include "derivcalc/errors.hpp"
#include "derivcalc/fixtures.hpp"
#include "test_support.hpp"

namespace derivcalc {
namespace {

using testing::deriv;
using testing::expr;
using testing::op;

const GF2Poly kX = GF2Poly::x();
const GF2Poly kOne = GF2Poly::one();

// --- characteristic 2 ---

TEST(Char2D, PublishedValues) {
  EXPECT_TRUE(char2_D(kX).is_zero());
  EXPECT_EQ(char2_D(GF2Poly::monomial(2)), kOne);
}

TEST(Char2D, BinomialParity) {
  EXPECT_EQ(char2_D(GF2Poly::monomial(3)), kX);
  EXPECT_TRUE(char2_D(GF2Poly::monomial(4)).is_zero());
  EXPECT_TRUE(char2_D(GF2Poly::monomial(5)).is_zero());
  EXPECT_EQ(char2_D(GF2Poly::monomial(6)), GF2Poly::monomial(4));
  EXPECT_EQ(char2_D(GF2Poly::monomial(7)), GF2Poly::monomial(5));
  EXPECT_TRUE(char2_D(kOne).is_zero());
}

TEST(Char2OrderCheck, OrderTwoButNotADerivation) {
  const Char2Report r = char2_order_check();
  EXPECT_TRUE(r.additive);
  EXPECT_TRUE(r.two_fold_vanishes);
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.derivation_witness.has_value());
  EXPECT_EQ(r.derivation_witness->first, kX);
  EXPECT_EQ(r.derivation_witness->second, kX);
  EXPECT_EQ(gf2_defect(char2_D, kX, kX), kOne);
  EXPECT_FALSE(r.derivation_candidate());
}

TEST(Char2OrderCheck, DefectLeavesTheDomain) {
  // x * x already has degree 2, so degree-1 inputs still expose the defect.
  const Char2Report r = char2_order_check(1);
  EXPECT_TRUE(r.passed());
  ASSERT_TRUE(r.derivation_witness.has_value());
  EXPECT_EQ(r.derivation_witness->first, kX);
  EXPECT_FALSE(char2_order_check(0).derivation_witness.has_value());
}

TEST(Char2OrderCheck, ModifiedMapIsADerivationCandidate) {
  // The formal derivative sends x^2 to 0 and is a genuine derivation.
  const GF2Map formal = [](const GF2Poly& p) { return p.derivative(); };
  const Char2Report r = char2_order_check(formal, 4);
  EXPECT_TRUE(r.d_of_x2.is_zero());
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.derivation_candidate());
}

TEST(Char2Compose, RowsForUnitA) {
  const Char2ComposeReport r = char2_compose_check(kOne);
  ASSERT_EQ(r.rows.size(), 9u);
  EXPECT_TRUE(r.rows[0].lhs.is_zero());
  EXPECT_TRUE(r.rows[2].lhs.is_zero());
  EXPECT_EQ(r.rows[3].lhs, GF2Poly::monomial(2));
  for (const auto& row : r.rows) EXPECT_EQ(row.lhs, row.rhs) << "k = " << row.k;
  EXPECT_TRUE(r.passed());
}

TEST(Char2Compose, AllQuadraticImages) {
  for (const auto& d1x : GF2Poly::all_up_to(2)) {
    for (const auto& d2x : GF2Poly::all_up_to(2)) {
      const Char2ComposeReport r = char2_compose_check(d1x, d2x, 8);
      ASSERT_TRUE(r.passed()) << d1x.to_string() << ", " << d2x.to_string();
      ASSERT_EQ(r.a, gf2_derivation(d1x)(d2x));
    }
  }
}

TEST(Char2, NestedDefectMatchesPairDefect) {
  for (const auto& x : GF2Poly::all_up_to(2)) {
    for (const auto& y : GF2Poly::all_up_to(2)) {
      ASSERT_EQ(gf2_nested_defect(char2_D, x, {y}), gf2_defect(char2_D, x, y));
    }
  }
}

// --- product ring ---

TEST(ProductRing, ComponentwiseValues) {
  const PairPoly v = PairPoly::monomials(2, 3);
  const PairPoly d2v = product_d2(v);
  EXPECT_TRUE(d2v.first.is_zero());
  EXPECT_EQ(d2v.to_string(), "(0, 3*x^2)");
  EXPECT_TRUE(product_d1(d2v).is_zero());
  EXPECT_TRUE(product_d1(PairPoly::one()).is_zero());

  const PairPoly x_zero{MultiPoly::variable(1, 0), MultiPoly(1)};
  EXPECT_EQ(product_d1(x_zero), (PairPoly{MultiPoly::constant(1, 1), MultiPoly(1)}));
}

TEST(ProductRing, NotAnIntegralDomain) {
  const PairPoly e1{MultiPoly::constant(1, 1), MultiPoly(1)};
  const PairPoly e2{MultiPoly(1), MultiPoly::constant(1, 1)};
  EXPECT_TRUE((e1 * e2).is_zero());
}

TEST(ProductRing, Demo) {
  const ProductRingReport r = product_ring_demo();
  EXPECT_TRUE(r.d1_is_derivation);
  EXPECT_TRUE(r.d2_is_derivation);
  EXPECT_TRUE(r.d1_nonzero);
  EXPECT_TRUE(r.d2_nonzero);
  EXPECT_TRUE(r.composition_vanishes);
  EXPECT_EQ(r.max_exponent, 6u);
}

// --- exact order of compositions ---

TEST(CompositionOrder, RepeatedPartial) {
  const Derivation d = Derivation::coordinate(1, 0);
  const CompositionOrderReport r = composition_order_demo({d, d});
  EXPECT_EQ(r.composed, op("d[2]"));
  EXPECT_EQ(r.degree, 2);
  EXPECT_EQ(r.exponent_poly, exponent_polynomial(op("d[2]")));
  EXPECT_EQ(r.exponent_degree, 2);
  EXPECT_TRUE(r.lower_witness.has_value());
  EXPECT_TRUE(r.top_vanishes);
  EXPECT_TRUE(r.passed());
}

TEST(CompositionOrder, MixedPair) {
  const CompositionOrderReport r =
      composition_order_demo({Derivation::coordinate(2, 0), deriv("t1 -> t1; t2 -> 1", 2)});
  EXPECT_EQ(r.degree, 2);
  const ExpPoly i1 = ExpPoly::variable(2, 0);
  const ExpPoly i2 = ExpPoly::variable(2, 1);
  EXPECT_EQ(r.exponent_poly, (i1 * i1).scaled(expr("1/t1", 2)) + (i1 * i2).scaled(expr("1/(t1*t2)", 2)));
  EXPECT_TRUE(r.passed());
}

TEST(CompositionOrder, SingleDerivation) {
  const CompositionOrderReport r = composition_order_demo({Derivation::coordinate(1, 0)});
  EXPECT_EQ(r.degree, 1);
  EXPECT_EQ(order_exact(r.composed).order, 1);
  EXPECT_TRUE(r.passed());
}

TEST(CompositionOrder, Preconditions) {
  EXPECT_THROW(composition_order_demo({}), PreconditionError);
  EXPECT_THROW(composition_order_demo({Derivation::coordinate(1, 0), Derivation(1)}), PreconditionError);
}

}  // namespace
}  // namespace derivcalc
