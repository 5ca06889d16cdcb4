#include <gtest/gtest.h>

#include <random>

#include "skeletron/berkovich.hpp"
#include "skeletron/checks/oracles.hpp"

using namespace skeletron;

namespace {

const Puiseux kT = Puiseux::t();

P1Point zeta(const char* center, const Rational& s) { return P1Point::type2(Puiseux::parse(center), s); }
P1Point kpt(const char* value) { return P1Point::k_point(Puiseux::parse(value)); }

std::vector<P1Point> d_0_1_t_inf() { return {kpt("0"), kpt("1"), kpt("t"), P1Point::infinity()}; }

}  // namespace

TEST(P1Point, CenterReducedModuloBall) {
  EXPECT_EQ(zeta("1 + t^2", 1), zeta("1", 1));
  EXPECT_NE(zeta("t", 2), zeta("0", 2));
  EXPECT_EQ(zeta("t", 1).to_string(), "zeta(0, 1)");
}

TEST(Join, Examples) {
  EXPECT_EQ(join(zeta("0", 2), zeta("0", 5)), zeta("0", 2));
  EXPECT_EQ(join(zeta("0", 3), zeta("t", 5)), zeta("0", 1));
  EXPECT_EQ(join(zeta("t", 3), zeta("t", 3)), zeta("t", 3));
  EXPECT_EQ(join(kpt("0"), kpt("t")), zeta("0", 1));
  EXPECT_EQ(join(kpt("t"), kpt("t")), kpt("t"));
  EXPECT_THROW(join(P1Point::infinity(), kpt("0")), InputError);
}

TEST(PathDistance, Examples) {
  EXPECT_EQ(path_distance(zeta("0", 2), zeta("0", 5)), ValQ(3));
  EXPECT_EQ(path_distance(zeta("0", 3), zeta("t", 5)), ValQ(6));
  EXPECT_TRUE(path_distance(kpt("1"), zeta("0", 0)).is_infinite());
  EXPECT_EQ(path_distance(kpt("1"), kpt("1")), ValQ(0));
}

TEST(PathDistance, MetricAxiomsOnRandomPoints) {
  std::mt19937_64 rng(3);
  std::vector<Puiseux> anchors = {Puiseux(), kT, Puiseux(1), Puiseux::parse("t^(1/2) - t^2")};
  for (int i = 0; i < 2000; ++i) {
    P1Point x = checks::random_type2(rng, anchors);
    P1Point y = checks::random_type2(rng, anchors);
    P1Point z = checks::random_type2(rng, anchors);
    ASSERT_EQ(path_distance(x, y), path_distance(y, x));
    ASSERT_EQ(path_distance(x, x), ValQ(0));
    ASSERT_EQ(path_distance(x, y) == ValQ(0), x == y);
    ASSERT_LE(path_distance(x, z), path_distance(x, y) + path_distance(y, z));
  }
}

TEST(EvalVal, Examples) {
  RationalFunction f(0, {{Puiseux(), 1}});
  EXPECT_EQ(eval_val(f, P1Point::gauss()), 0);
  RationalFunction g(0, {{Puiseux(1), 1}, {kT, 1}, {Puiseux(), -1}});
  EXPECT_EQ(eval_val(g, zeta("0", make_rational(1, 2))), 0);
  RationalFunction c(7, {});
  EXPECT_EQ(eval_val(c, zeta("t^(1/3)", 9)), 7);
  EXPECT_THROW(eval_val(f, kpt("1")), InputError);
}

TEST(EvalVal, AgreesWithRecenteringOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    RationalFunction f = checks::random_function(rng, 5, 3);
    std::vector<Puiseux> roots;
    for (const auto& factor : f.factors()) roots.push_back(*factor.root);
    P1Point x = checks::random_type2(rng, roots);
    ASSERT_EQ(eval_val(f, x), checks::recentering_oracle(f, x)) << x.to_string();
  }
}

TEST(RationalFunction, OrdersAndSupport) {
  RationalFunction f(0, {{Puiseux(), 1}, {kT, 1}, {Puiseux(1), -2}});
  EXPECT_EQ(f.order_at_infinity(), 0);
  EXPECT_EQ(f.order_at(kpt("1")), -2);
  EXPECT_EQ(f.order_at(kpt("5")), 0);
  EXPECT_EQ(f.order_at(P1Point::infinity()), 0);
  EXPECT_EQ(f.support().size(), 3u);
  RationalFunction g(0, {{Puiseux(), 1}});
  EXPECT_EQ(g.order_at(P1Point::infinity()), -1);
  EXPECT_THROW(RationalFunction(0, {{Puiseux(), 1}, {std::nullopt, 2}}), InputError);
  EXPECT_THROW(RationalFunction(0, {{Puiseux(), 0}}), InputError);
}

TEST(SkeletonTree, MultiplicativeGroup) {
  std::vector<P1Point> d = {kpt("0"), P1Point::infinity()};
  SkeletonTree tree = build_skeleton_tree(d);
  ASSERT_EQ(tree.graph().vertices().size(), 1u);
  EXPECT_TRUE(tree.graph().edges().empty());
  EXPECT_EQ(tree.graph().rays().size(), 2u);
  EXPECT_EQ(tree.placement(tree.top()), P1Point::gauss());
}

TEST(SkeletonTree, FourPunctures) {
  SkeletonTree tree = build_skeleton_tree(d_0_1_t_inf());
  const MetricGraph& g = tree.graph();
  ASSERT_EQ(g.vertices().size(), 2u);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0].length, 1);
  auto outer = tree.vertex_at(zeta("0", 0));
  auto inner = tree.vertex_at(zeta("0", 1));
  ASSERT_TRUE(outer && inner);
  EXPECT_EQ(tree.ray_base(kpt("1")), *outer);
  EXPECT_EQ(tree.ray_base(P1Point::infinity()), *outer);
  EXPECT_EQ(tree.ray_base(kpt("0")), *inner);
  EXPECT_EQ(tree.ray_base(kpt("t")), *inner);
  EXPECT_EQ(tree.parent(*inner), *outer);
}

TEST(SkeletonTree, ExtraVertexSplitsLine) {
  std::vector<P1Point> d = {kpt("0"), P1Point::infinity()};
  std::vector<P1Point> extra = {zeta("0", 4)};
  SkeletonTree tree = build_skeleton_tree(d, extra);
  const MetricGraph& g = tree.graph();
  ASSERT_EQ(g.vertices().size(), 2u);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.edges()[0].length, 4);
  EXPECT_TRUE(tree.vertex_at(zeta("0", 0)));
  EXPECT_EQ(tree.ray_base(kpt("0")), *tree.vertex_at(zeta("0", 4)));
}

TEST(SkeletonTree, RejectsBadInput) {
  std::vector<P1Point> one = {kpt("0")};
  EXPECT_THROW(build_skeleton_tree(one), InputError);
  std::vector<P1Point> dup = {kpt("0"), kpt("0")};
  EXPECT_THROW(build_skeleton_tree(dup), InputError);
  std::vector<P1Point> typed = {kpt("0"), zeta("0", 1)};
  EXPECT_THROW(build_skeleton_tree(typed), InputError);
}

TEST(Retract, FixesSkeletonPoints) {
  SkeletonTree tree = build_skeleton_tree(d_0_1_t_inf());
  for (const auto& [id, p] : tree.placement()) EXPECT_EQ(retract(p, tree), p);
  EXPECT_EQ(retract(zeta("0", make_rational(1, 2)), tree), zeta("0", make_rational(1, 2)));
  EXPECT_EQ(retract(zeta("1", 7), tree), zeta("1", 7));
}

TEST(Retract, PuncturesGoToRayBases) {
  SkeletonTree tree = build_skeleton_tree(d_0_1_t_inf());
  EXPECT_EQ(retract(kpt("1"), tree), zeta("0", 0));
  EXPECT_EQ(retract(kpt("t"), tree), zeta("0", 1));
  EXPECT_EQ(retract(P1Point::infinity(), tree), zeta("0", 0));
}

TEST(Retract, PointHangingOffTheRayToZero) {
  // ζ(t², 3) sits below ζ(0, 2), which lies on the ray from ζ(0, 1) to 0
  SkeletonTree tree = build_skeleton_tree(d_0_1_t_inf());
  P1Point x = zeta("t^2", 3);
  EXPECT_EQ(retract(x, tree), zeta("0", 2));
  EXPECT_EQ(checks::brute_force_retract(x, tree, make_rational(1, 4)), zeta("0", 2));
}

TEST(Retract, OffTheFiniteHull) {
  // without ∞ the skeleton is bounded above by the join of the punctures
  std::vector<P1Point> d = {kpt("t"), kpt("t + t^3")};
  SkeletonTree tree = build_skeleton_tree(d);
  EXPECT_EQ(retract(P1Point::gauss(), tree), zeta("t", 3));
  EXPECT_EQ(retract(zeta("5", 2), tree), zeta("t", 3));
  EXPECT_EQ(retract(P1Point::infinity(), tree), zeta("t", 3));
}

TEST(Retract, IdempotentAndMatchesGridSearch) {
  std::mt19937_64 rng(9);
  std::vector<Puiseux> roots = {Puiseux(), kT, Puiseux(1), Puiseux::parse("t + t^(3/2)")};
  std::vector<P1Point> d;
  for (const auto& r : roots) d.push_back(P1Point::k_point(r));
  d.push_back(P1Point::infinity());
  SkeletonTree tree = build_skeleton_tree(d);
  for (int i = 0; i < 200; ++i) {
    P1Point x = checks::random_type2(rng, roots);
    P1Point tx = retract(x, tree);
    ASSERT_EQ(retract(tx, tree), tx);
    ASSERT_EQ(checks::brute_force_retract(x, tree, make_rational(1, 12)), tx) << x.to_string();
  }
}
