#include <gtest/gtest.h>

#include "skeletron/tropical.hpp"

using namespace skeletron;

namespace {

TropicalLaurent L(std::initializer_list<std::pair<const int, Rational>> terms) { return TropicalLaurent(terms); }

}  // namespace

TEST(EvalTrop, Examples) {
  EXPECT_EQ(eval_trop(L({{1, 0}}), 5), 5);
  EXPECT_EQ(eval_trop(L({{0, 1}, {1, 0}}), 3), 1);
  EXPECT_EQ(eval_trop(L({{-1, 2}, {0, 0}, {2, 1}}), make_rational(1, 2)), 0);
  EXPECT_THROW(TropicalLaurent({}), InputError);
}

TEST(Breakpoints, TwoTerms) {
  auto bps = breakpoints(L({{0, 1}, {1, 0}}), Interval::closed(0, 3));
  ASSERT_EQ(bps.size(), 1u);
  EXPECT_EQ(bps[0], (Breakpoint{1, 1, 0}));
}

TEST(Breakpoints, MonomialHasNone) {
  EXPECT_TRUE(breakpoints(L({{1, 0}}), Interval::whole_line()).empty());
  EXPECT_TRUE(breakpoints(L({{1, 0}}), Interval::closed(-4, 4)).empty());
}

TEST(Breakpoints, ThreeTerms) {
  auto bps = breakpoints(L({{0, 3}, {1, 1}, {2, 0}}), Interval::closed(0, 5));
  ASSERT_EQ(bps.size(), 2u);
  EXPECT_EQ(bps[0], (Breakpoint{1, 2, 1}));
  EXPECT_EQ(bps[1], (Breakpoint{2, 1, 0}));
}

TEST(Breakpoints, EndpointsAreNotInterior) {
  EXPECT_TRUE(breakpoints(L({{0, 1}, {1, 0}}), Interval::closed(1, 3)).empty());
  EXPECT_EQ(breakpoints(L({{0, 1}, {1, 0}}), Interval(std::nullopt, Rational(2), false, true)).size(), 1u);
}

TEST(Breakpoints, DominatedTermIgnored) {
  // 3 + s lies above min(1, 2s) everywhere, so only s = 1/2 is a breakpoint
  auto bps = breakpoints(L({{0, 1}, {1, 3}, {2, 0}}), Interval::whole_line());
  ASSERT_EQ(bps.size(), 1u);
  EXPECT_EQ(bps[0], (Breakpoint{make_rational(1, 2), 2, 0}));
}

TEST(Slopes, LeftAndRight) {
  auto f = L({{0, 1}, {1, 0}});
  EXPECT_EQ(left_slope(f, 1), 1);
  EXPECT_EQ(right_slope(f, 1), 0);
  EXPECT_EQ(left_slope(f, 0), 1);
  EXPECT_EQ(right_slope(f, 0), 1);
}

TEST(SlopeChangeCount, Examples) {
  std::vector<ZeroPole> zero{{1, 1}}, pole{{1, -1}}, both{{2, 1}, {2, -1}};
  EXPECT_EQ(slope_change_count(zero, 1), -1);
  EXPECT_EQ(slope_change_count(pole, 1), 1);
  EXPECT_EQ(slope_change_count(both, 2), 0);
  EXPECT_EQ(slope_change_count(zero, 2), 0);
}

TEST(QuotientBreakpoints, CancellingChangesDropped) {
  // (T + t) / (T + t): identical numerator and denominator
  auto num = L({{0, 1}, {1, 0}});
  EXPECT_TRUE(quotient_breakpoints(num, num, Interval::whole_line()).empty());
  auto bps = quotient_breakpoints(num, L({{0, 0}}), Interval::whole_line());
  ASSERT_EQ(bps.size(), 1u);
  EXPECT_EQ(bps[0], (Breakpoint{1, 1, 0}));
}

TEST(UnitDecomposition, Examples) {
  EXPECT_EQ(unit_decomposition(L({{2, 1}}), Interval::closed(0, 2)), (UnitData{2, 1}));
  EXPECT_FALSE(unit_decomposition(L({{0, 1}, {1, 0}}), Interval::closed(0, 2)));
  EXPECT_FALSE(unit_decomposition(L({{0, 0}, {1, 0}}), Interval::closed(0, 2)));
  EXPECT_EQ(unit_decomposition(L({{0, 0}, {1, 0}}), Interval(Rational(0), Rational(2), false, true)), (UnitData{0, 0}));
  EXPECT_EQ(unit_decomposition(L({{0, 0}, {1, 0}}), Interval(Rational(-2), Rational(0), true, false)), (UnitData{1, 0}));
  EXPECT_FALSE(unit_decomposition(L({{0, 0}, {1, 0}}), Interval::whole_line()));
}

TEST(MapSkeleton, Examples) {
  EXPECT_EQ(map_skeleton(2, 1, Interval::closed(0, 2)), Interval::closed(1, 5));
  EXPECT_EQ(map_skeleton(-1, 0, Interval::closed(0, 3)), Interval::closed(-3, 0));
  EXPECT_EQ(map_skeleton(1, 0, Interval::closed(make_rational(1, 3), 7)), Interval::closed(make_rational(1, 3), 7));
  EXPECT_THROW(map_skeleton(0, 0, Interval::closed(0, 1)), InputError);
}

TEST(Interval, Length) {
  EXPECT_EQ(Interval::closed(1, 4).length(), ValQ(3));
  EXPECT_TRUE(Interval::whole_line().length().is_infinite());
  EXPECT_THROW(Interval::closed(2, 1), InputError);
}

TEST(LaurentPolynomial, ExpandAndTropicalize) {
  // (T - 1)^2 = T^2 - 2T + 1
  auto p = LaurentPolynomial::linear(Puiseux(-1)).pow(2);
  EXPECT_EQ(p.coefficients().at(1), Puiseux(-2));
  // (T + t)(T + t^2) has Newton points (0, 3), (1, 1), (2, 0)
  auto q = LaurentPolynomial::linear(Puiseux::t()) * LaurentPolynomial::linear(Puiseux::monomial(1, 2));
  EXPECT_EQ(q.tropicalize().terms(), (TropicalLaurent::TermMap{{0, 3}, {1, 1}, {2, 0}}));
  EXPECT_THROW(LaurentPolynomial().tropicalize(), InputError);
}
