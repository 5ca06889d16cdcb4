#include <gtest/gtest.h>

#include <random>

#include "skeletron/checks/oracles.hpp"
#include "skeletron/slope_formula.hpp"

using namespace skeletron;

namespace {

P1Point kpt(const char* value) { return P1Point::k_point(Puiseux::parse(value)); }

RationalFunction worked_f() {
  return RationalFunction(0, {{Puiseux(), 1}, {Puiseux::t(), 1}, {Puiseux(1), -2}});
}

SkeletonTree worked_tree() {
  std::vector<P1Point> d = {kpt("0"), kpt("t"), kpt("1"), P1Point::infinity()};
  return build_skeleton_tree(d);
}

}  // namespace

TEST(ComputeF, IdentityOnMultiplicativeGroup) {
  std::vector<P1Point> d = {kpt("0"), P1Point::infinity()};
  SkeletonTree tree = build_skeleton_tree(d);
  PLFunction F = compute_F(RationalFunction(0, {{Puiseux(), 1}}), tree);
  EXPECT_EQ(F.vertex_values.at(tree.top()), 0);
  EXPECT_EQ(F.ray_slopes.at("0"), 1);
  EXPECT_EQ(F.ray_slopes.at("inf"), -1);
}

TEST(ComputeF, ConstantFunction) {
  SkeletonTree tree = worked_tree();
  PLFunction F = compute_F(RationalFunction(7, {}), tree);
  for (const auto& [v, value] : F.vertex_values) EXPECT_EQ(value, 7);
  for (int s : F.edge_slopes) EXPECT_EQ(s, 0);
  for (const auto& [m, s] : F.ray_slopes) EXPECT_EQ(s, 0);
}

TEST(ComputeF, WorkedExample) {
  SkeletonTree tree = worked_tree();
  PLFunction F = compute_F(worked_f(), tree);
  std::string outer = *tree.vertex_at(P1Point::gauss());
  std::string inner = *tree.vertex_at(P1Point::type2(Puiseux(), 1));
  EXPECT_EQ(F.vertex_values.at(outer), 0);
  EXPECT_EQ(F.vertex_values.at(inner), 2);
  EXPECT_EQ(F.outgoing_slope(tree.graph(), 0, outer), 2);
  EXPECT_EQ(F.ray_slopes, (std::map<std::string, int>{{"0", 1}, {"t", 1}, {"1", -2}, {"inf", 0}}));
  EXPECT_TRUE(is_consistent(F, tree.graph()));
}

TEST(ComputeF, ValuesMatchRecenteringOracle) {
  SkeletonTree tree = worked_tree();
  RationalFunction f = worked_f();
  PLFunction F = compute_F(f, tree);
  for (const auto& [id, point] : tree.placement()) {
    EXPECT_EQ(F.vertex_values.at(id), checks::recentering_oracle(f, point));
  }
}

TEST(ComputeF, RejectsZeroOffThePunctures) {
  std::vector<P1Point> d = {kpt("0"), P1Point::infinity()};
  EXPECT_THROW(compute_F(RationalFunction(0, {{Puiseux(1), 1}}), build_skeleton_tree(d)), InputError);
}

TEST(VerifySlopeFormula, WorkedExamplePasses) {
  SlopeCheckOptions options;
  options.samples = 20;
  SkeletonTree tree = worked_tree();
  SlopeReport report = verify_slope_formula(worked_f(), tree, options);
  EXPECT_TRUE(report.pass());
  for (const auto& [v, sum] : report.harmonicity) EXPECT_EQ(sum, 0) << v;
  EXPECT_EQ(report.samples.size(), 20u);
  EXPECT_EQ(report.ray_slope_sum, 0);
}

TEST(VerifySlopeFormula, WrongClaimedOrderFails) {
  std::vector<P1Point> d = {kpt("0"), kpt("1"), P1Point::infinity()};
  SlopeCheckOptions options;
  options.claimed_orders = {{"1", 1}};
  SlopeReport report = verify_slope_formula(RationalFunction(0, {{Puiseux(), 1}}), build_skeleton_tree(d), options);
  EXPECT_FALSE(report.pass());
  int mismatches = 0;
  for (const auto& r : report.rays) {
    if (!r.match) {
      ++mismatches;
      EXPECT_EQ(r.mark, "1");
      EXPECT_EQ(r.slope, 0);
    }
  }
  EXPECT_EQ(mismatches, 1);
}

TEST(VerifySlopeFormula, DeterministicForFixedSeed) {
  SlopeCheckOptions options;
  options.samples = 10;
  options.seed = 1234;
  SkeletonTree tree = worked_tree();
  SlopeReport a = verify_slope_formula(worked_f(), tree, options);
  SlopeReport b = verify_slope_formula(worked_f(), tree, options);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].point, b.samples[i].point);
}

TEST(DirectionCount, Examples) {
  SkeletonTree tree = worked_tree();
  EXPECT_EQ(direction_count(tree, *tree.vertex_at(P1Point::gauss())), 3);
  std::vector<P1Point> d = {kpt("0"), P1Point::infinity()};
  SkeletonTree line = build_skeleton_tree(d);
  EXPECT_EQ(direction_count(line, line.top()), 2);
}

TEST(SampleOffSkeleton, PointsAreOff) {
  SkeletonTree tree = worked_tree();
  std::mt19937_64 rng(1);
  auto points = sample_off_skeleton(tree, 50, rng);
  EXPECT_EQ(points.size(), 50u);
  for (const auto& x : points) EXPECT_NE(retract(x, tree), x);
}

TEST(IntegrateRaySlopes, RecoversFUpToConstant) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    RationalFunction f = checks::random_function(rng, 5, 3);
    std::vector<P1Point> d = f.support();
    if (std::find(d.begin(), d.end(), P1Point::infinity()) == d.end()) d.push_back(P1Point::infinity());
    SkeletonTree tree = build_skeleton_tree(d);
    PLFunction F = compute_F(f, tree);
    PLFunction G = integrate_ray_slopes(tree, F.ray_slopes, tree.top(), F.vertex_values.at(tree.top()) + 5);
    ASSERT_EQ(F.edge_slopes, G.edge_slopes);
    for (const auto& [v, value] : F.vertex_values) ASSERT_EQ(G.vertex_values.at(v), value + 5);
  }
}

TEST(IntegrateRaySlopes, RejectsUnbalancedData) {
  SkeletonTree tree = worked_tree();
  std::map<std::string, int> slopes{{"0", 1}, {"t", 1}, {"1", -1}, {"inf", 0}};
  EXPECT_THROW(integrate_ray_slopes(tree, slopes, tree.top(), 0), InputError);
}
