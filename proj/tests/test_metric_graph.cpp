#include <gtest/gtest.h>

#include "skeletron/metric_graph.hpp"

using namespace skeletron;

namespace {

MetricGraph theta(const Rational& a = 1, const Rational& b = 2, const Rational& c = 3) {
  return MetricGraph({{"p", 0}, {"q", 0}}, {{"p", "q", a}, {"p", "q", b}, {"p", "q", c}}, {});
}

MetricGraph circle(const Rational& len, int weight = 0) { return MetricGraph({{"o", weight}}, {{"o", "o", len}}, {}); }

}  // namespace

TEST(MetricGraph, ConstructorValidates) {
  EXPECT_THROW(MetricGraph({{"a", 0}, {"a", 0}}, {}, {}), InputError);
  EXPECT_THROW(MetricGraph({{"a", 0}}, {{"a", "b", 1}}, {}), InputError);
  EXPECT_THROW(MetricGraph({{"a", 0}}, {{"a", "a", 0}}, {}), InputError);
  EXPECT_THROW(MetricGraph({{"a", -1}}, {}, {}), InputError);
  EXPECT_THROW(MetricGraph({{"a", 0}}, {}, {{"a", "m"}, {"a", "m"}}), InputError);
  EXPECT_THROW(MetricGraph({{"a", 0}}, {}, {{"z", "m"}}), InputError);
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti1(theta()), 2);
  EXPECT_EQ(betti1(MetricGraph({{"a", 0}, {"b", 0}, {"c", 0}}, {{"a", "b", 1}, {"b", "c", 1}}, {})), 0);
  EXPECT_EQ(betti1(circle(1)), 1);
  EXPECT_THROW(betti1(MetricGraph({{"a", 0}, {"b", 0}}, {}, {})), InputError);
}

TEST(TotalGenus, Examples) {
  EXPECT_EQ(total_genus(theta()), 2);
  EXPECT_EQ(total_genus(MetricGraph({{"e", 1}}, {}, {})), 1);
  EXPECT_EQ(total_genus(circle(5)), 1);
}

TEST(EulerChar, Examples) {
  EXPECT_EQ(euler_char(circle(5)), 0);
  EXPECT_EQ(euler_char(MetricGraph({{"g", 0}}, {}, {{"g", "0"}, {"g", "inf"}})), 0);
  MetricGraph t = theta();
  EXPECT_EQ(euler_char(MetricGraph(t.vertices(), t.edges(), {{"p", "x"}})), -3);
}

TEST(Valence, LoopsCountTwiceRaysOnce) {
  MetricGraph g({{"o", 0}}, {{"o", "o", 2}}, {{"o", "m"}});
  EXPECT_EQ(g.valence("o"), 3);
  EXPECT_EQ(theta().valence("p"), 3);
  EXPECT_EQ(MetricGraph({{"g", 0}}, {}, {{"g", "0"}, {"g", "inf"}}).valence("g"), 2);
}

TEST(Refine, SplitsLoop) {
  MetricGraph g = refine(circle(5), 0, 2);
  ASSERT_EQ(g.vertices().size(), 2u);
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0].length, 2);
  EXPECT_EQ(g.edges()[1].length, 3);
  EXPECT_EQ(betti1(g), 1);
  std::string fresh = g.vertices()[1].id;
  EXPECT_EQ(g.weight(fresh), 0);
}

TEST(Refine, SplitsEdge) {
  MetricGraph g = refine(MetricGraph({{"a", 0}, {"b", 0}}, {{"a", "b", 1}}, {}), 0, make_rational(1, 2));
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0].length, make_rational(1, 2));
  EXPECT_EQ(g.edges()[1].length, make_rational(1, 2));
  EXPECT_EQ(shortest_path(g, "a", "b"), 1);
  EXPECT_THROW(refine(g, 0, make_rational(1, 2)), InputError);
  EXPECT_THROW(refine(g, 7, make_rational(1, 4)), InputError);
}

TEST(ShortestPath, Examples) {
  EXPECT_EQ(shortest_path(theta(), "p", "q"), 1);
  EXPECT_EQ(shortest_path(theta(), "p", "p"), 0);
  MetricGraph disconnected({{"a", 0}, {"b", 0}}, {}, {});
  EXPECT_THROW(shortest_path(disconnected, "a", "b"), InputError);
}

TEST(Isomorphism, Examples) {
  MetricGraph renamed({{"y", 0}, {"x", 0}}, {{"y", "x", 3}, {"x", "y", 1}, {"y", "x", 2}}, {});
  EXPECT_TRUE(is_isomorphic(theta(), renamed));
  EXPECT_FALSE(is_isomorphic(theta(1, 2, 3), theta(1, 2, 4)));
  EXPECT_FALSE(is_isomorphic(circle(5), refine(circle(5), 0, 2)));
  EXPECT_FALSE(is_isomorphic(circle(5, 0), circle(5, 1)));
  MetricGraph marked_a({{"o", 0}}, {{"o", "o", 1}}, {{"o", "a"}});
  MetricGraph marked_b({{"o", 0}}, {{"o", "o", 1}}, {{"o", "b"}});
  EXPECT_FALSE(is_isomorphic(marked_a, marked_b));
}

TEST(Semistable, LoopsNeedSplitting) {
  MetricGraph g({{"o", 0}}, {{"o", "o", 4}}, {{"o", "m"}});
  EXPECT_FALSE(is_strongly_semistable(g));
  MetricGraph h = make_loopless(g);
  EXPECT_EQ(h.vertices().size(), 2u);
  EXPECT_EQ(total_genus(h), total_genus(g));
  EXPECT_EQ(shortest_path(h, "o", h.vertices()[1].id), 2);
}

TEST(PLFunction, Consistency) {
  MetricGraph g({{"a", 0}, {"b", 0}}, {{"a", "b", 2}}, {{"b", "m"}});
  PLFunction f{{{"a", 0}, {"b", 6}}, {3}, {{"m", -3}}};
  EXPECT_TRUE(is_consistent(f, g));
  EXPECT_EQ(f.outgoing_slope(g, 0, "b"), -3);
  f.vertex_values["b"] = 5;
  EXPECT_FALSE(is_consistent(f, g));
}
