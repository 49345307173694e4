#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tofn/piasecki.hpp"

using namespace tofn;

namespace {

const TypedOfn X = trapezoid(0, -1, -1, 0); // (-1, -x)
const TypedOfn Y = trapezoid(0, 2, 4, -2);  // (2, 4x - 2)

} // namespace

TEST(Piasecki, CornersOfWorkedProduct) {
  const PiaseckiResult r = p_op(Star::mul, X, Y);
  EXPECT_EQ(r.corners, (TrapezoidCorners{-2, -2, -2, 0}));
  EXPECT_EQ(r.up_rule, SideRule::constant);
  EXPECT_EQ(r.down_rule, SideRule::product_form);
  EXPECT_TRUE(r.down_fn.is_polynomial());
  EXPECT_EQ(r.down_fn.num, (Polynomial{0, 2, -4}));
  EXPECT_EQ(r.up_fn(0.3), -2.0);
}

TEST(Piasecki, WorkedProductIsNotClosed) {
  const ClosureReport c = p_closure_check(p_op(Star::mul, X, Y));
  EXPECT_FALSE(c.closed);
  EXPECT_FALSE(static_cast<bool>(c));
  EXPECT_EQ(c.propriety.violation, KViolation::down_not_monotone);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness_side, Side::down);
  EXPECT_EQ(c.witness->alpha_first, 0.0);
  EXPECT_NEAR(c.witness->alpha_second, 0.5, 1e-15);
  EXPECT_EQ(c.witness->value, 0.0);
  const PiaseckiResult r = p_op(Star::mul, X, Y);
  EXPECT_EQ(r.down_fn(0.0), 0.0);
  EXPECT_EQ(r.down_fn(0.5), 0.0);
}

TEST(Piasecki, AdditionOfProperTrapezoidsCloses) {
  const PiaseckiResult r = p_op(Star::add, trapezoid(1, 0, -1, 3), trapezoid(2, 1, -1, 4));
  EXPECT_EQ(r.corners, (TrapezoidCorners{1, 4, 5, 7}));
  EXPECT_TRUE(p_closure_check(r).closed);
}

TEST(Piasecki, DivisionUsesQuotientSides) {
  // (1 + a, 4 - a) / (2 + a, 5 - a)
  const PiaseckiResult r = p_op(Star::div, trapezoid(1, 1, -1, 4), trapezoid(1, 2, -1, 5));
  EXPECT_FALSE(r.up_fn.is_polynomial());
  EXPECT_DOUBLE_EQ(r.up_fn(0.5), 0.6);
  EXPECT_DOUBLE_EQ(r.down_fn(1.0), 0.75);
  const ClosureReport c = p_closure_check(r);
  EXPECT_TRUE(c.closed);
  EXPECT_EQ(c.propriety.orientation, Orientation::increasing);
}

TEST(Piasecki, DivisionByVanishingSide) {
  EXPECT_THROW(p_op(Star::div, X, trapezoid(2, -1, -1, 3)), DivisionByZero);
  EXPECT_THROW(p_op(Star::div, X, trapezoid(1, 0, -1, 3)), DivisionByZero);
}

TEST(Piasecki, OnlyTrapezoidalOperands) {
  EXPECT_THROW(p_op(Star::add, gaussian(1, 0, -1, 0), X), MixedTypeError);
}

TEST(PiaseckiProperty, AdditionCornersAreSums) {
  oracle::Generator gen(8);
  for (int i = 0; i < 1000; ++i) {
    const TypedOfn x = gen.proper(bases::identity()), y = gen.proper(bases::identity());
    if (orientation(x) != Orientation::increasing || orientation(y) != Orientation::increasing) continue;
    const PiaseckiResult r = p_op(Star::add, x, y);
    const auto cx = TrapezoidCorners::of(x), cy = TrapezoidCorners::of(y);
    ASSERT_EQ(r.corners, (TrapezoidCorners{cx.a + cy.a, cx.b + cy.b, cx.c + cy.c, cx.d + cy.d}));
    ASSERT_TRUE(p_closure_check(r).closed) << x << " + " << y;
  }
}

TEST(PiaseckiProperty, WitnessesRepeatValues) {
  oracle::Generator gen(9);
  int seen = 0;
  for (int i = 0; i < 3000; ++i) {
    const TypedOfn x(bases::identity(), gen.tuple(-3, 3)), y(bases::identity(), gen.tuple(-3, 3));
    const PiaseckiResult r = p_op(Star::mul, x, y);
    const ClosureReport c = p_closure_check(r);
    if (!c.witness) continue;
    ++seen;
    const RationalSide& f = *c.witness_side == Side::up ? r.up_fn : r.down_fn;
    ASSERT_LT(c.witness->alpha_first, c.witness->alpha_second);
    ASSERT_NEAR(f(c.witness->alpha_first), c.witness->value, 1e-9);
    ASSERT_NEAR(f(c.witness->alpha_second), c.witness->value, 1e-9);
  }
  EXPECT_GT(seen, 0);
}
