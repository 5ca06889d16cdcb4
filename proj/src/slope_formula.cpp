#include "skeletron/slope_formula.hpp"

#include <algorithm>
#include <deque>

namespace skeletron {

namespace {

int integral_slope(const Rational& rise, const Rational& run, const std::string& where) {
  Rational slope = rise / run;
  if (!is_integer(slope)) {
    throw SlopeError("non-integer slope " + format_rational(slope) + " on " + where +
                     " (f has a zero or pole off the punctures?)");
  }
  return static_cast<int>(to_long(slope));
}

// Outgoing slope along the ray from `base` toward `target`, read beyond
// every Newton breakpoint of f along that ray.
int ray_slope(const RationalFunction& f, const P1Point& base, const P1Point& target, const Rational& base_value) {
  Rational s0 = base.radius().value();
  if (target.is_infinity()) {
    Rational shallow = s0;
    for (const auto& factor : f.factors()) {
      ValQ d = (base.center() - *factor.root).valuation();
      if (d.is_finite() && d.value() < shallow) shallow = d.value();
    }
    Rational probe = shallow - 1;
    Rational near = eval_val(f, P1Point::type2(base.center(), probe));
    Rational far = eval_val(f, P1Point::type2(base.center(), probe - 1));
    int slope = integral_slope(near - base_value, s0 - probe, "the ray to inf");
    if (far - near != slope) throw SlopeError("probe instability on the ray to inf");
    return slope;
  }
  Rational deepest = s0;
  for (const auto& factor : f.factors()) {
    ValQ d = (target.center() - *factor.root).valuation();
    if (d.is_finite() && d.value() > deepest) deepest = d.value();
  }
  Rational probe = deepest + 1;
  Rational near = eval_val(f, P1Point::type2(target.center(), probe));
  Rational far = eval_val(f, P1Point::type2(target.center(), probe + 1));
  int slope = integral_slope(near - base_value, probe - s0, "the ray to " + target.to_string());
  if (far - near != slope) throw SlopeError("probe instability on the ray to " + target.to_string());
  return slope;
}

Rational random_rational(std::mt19937_64& rng, int lo_quarters, int hi_quarters) {
  std::uniform_int_distribution<int> q(lo_quarters, hi_quarters);
  return make_rational(q(rng), 4);
}

}  // namespace

PLFunction compute_F(const RationalFunction& f, const SkeletonTree& tree) {
  for (const auto& p : f.support()) {
    if (std::find(tree.punctures().begin(), tree.punctures().end(), p) == tree.punctures().end()) {
      throw InputError("f has a zero or pole at " + p.to_string() + ", which is not a puncture");
    }
  }
  const MetricGraph& g = tree.graph();
  PLFunction F;
  for (const auto& [id, point] : tree.placement()) F.vertex_values.emplace(id, eval_val(f, point));
  for (const auto& e : g.edges()) {
    F.edge_slopes.push_back(integral_slope(F.vertex_values.at(e.v) - F.vertex_values.at(e.u), e.length,
                                           "edge " + e.u + "-" + e.v));
  }
  for (const auto& r : g.rays()) {
    F.ray_slopes.emplace(r.mark, ray_slope(f, tree.placement(r.base), tree.ray_targets().at(r.mark),
                                           F.vertex_values.at(r.base)));
  }
  return F;
}

int direction_count(const SkeletonTree& tree, const std::string& vertex) { return tree.graph().valence(vertex); }

bool SlopeReport::pass() const {
  if (!integer_slopes || ray_slope_sum != 0) return false;
  for (const auto& [v, sum] : harmonicity) {
    if (sum != 0) return false;
  }
  return std::all_of(rays.begin(), rays.end(), [](const RaySlopeCheck& r) { return r.match; }) &&
         std::all_of(samples.begin(), samples.end(), [](const RetractionSample& s) { return s.match; });
}

SlopeReport verify_slope_formula(const RationalFunction& f, const SkeletonTree& tree, const SlopeCheckOptions& options) {
  SlopeReport report;
  report.F = compute_F(f, tree);
  const MetricGraph& g = tree.graph();
  for (const auto& v : g.vertices()) {
    int sum = 0;
    for (std::size_t i : g.incident_edges(v.id)) {
      if (!g.edges()[i].is_loop()) sum += report.F.outgoing_slope(g, i, v.id);
    }
    for (std::size_t i : g.incident_rays(v.id)) sum += report.F.ray_slopes.at(g.rays()[i].mark);
    report.harmonicity.emplace(v.id, sum);
  }
  for (const auto& r : g.rays()) {
    int slope = report.F.ray_slopes.at(r.mark);
    auto claimed = options.claimed_orders.find(r.mark);
    int expected = claimed != options.claimed_orders.end() ? claimed->second : f.order_at(tree.ray_targets().at(r.mark));
    report.rays.push_back({r.mark, slope, expected, slope == expected});
    report.ray_slope_sum += slope;
  }
  if (options.samples > 0) {
    std::mt19937_64 rng(options.seed);
    for (auto& x : sample_off_skeleton(tree, options.samples, rng)) {
      P1Point tx = retract(x, tree);
      Rational fx = eval_val(f, x);
      Rational ftx = eval_val(f, tx);
      bool match = fx == ftx;
      report.samples.push_back({std::move(x), std::move(tx), std::move(fx), std::move(ftx), match});
    }
  }
  return report;
}

std::vector<P1Point> sample_off_skeleton(const SkeletonTree& tree, std::size_t count, std::mt19937_64& rng) {
  std::vector<P1Point> bases;
  for (const auto& [id, p] : tree.placement()) bases.push_back(p);
  for (const auto& p : tree.punctures()) {
    if (!p.is_infinity()) bases.push_back(P1Point::type2(p.center(), tree.placement(tree.ray_base(p)).radius().value() + 1));
  }
  std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<P1Point> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 200 * count; ++attempt) {
    const P1Point& base = bases[pick(rng)];
    Rational level = base.radius().value() + random_rational(rng, -4, 8);
    int c = coeff(rng);
    if (c == 0) continue;
    Puiseux center = base.center() + Puiseux::monomial(c, level);
    P1Point x = P1Point::type2(center, level + random_rational(rng, 1, 12));
    if (retract(x, tree) != x) out.push_back(std::move(x));
  }
  return out;
}

PLFunction integrate_ray_slopes(const SkeletonTree& tree, const std::map<std::string, int>& ray_slopes,
                                const std::string& anchor, const Rational& anchor_value) {
  const MetricGraph& g = tree.graph();
  // children have strictly larger radius than their parent
  std::vector<std::string> order;
  for (const auto& v : g.vertices()) order.push_back(v.id);
  std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    return tree.placement(b).radius() < tree.placement(a).radius();
  });
  std::map<std::string, int> subtree_out;
  for (const auto& id : order) {
    int out = subtree_out[id];
    for (std::size_t i : g.incident_rays(id)) out += ray_slopes.at(g.rays()[i].mark);
    subtree_out[id] = out;
    if (auto p = tree.parent(id)) subtree_out[*p] += out;
  }
  if (subtree_out.at(tree.top()) != 0) throw InputError("ray slopes do not sum to zero; no harmonic function exists");

  PLFunction F;
  F.ray_slopes = ray_slopes;
  for (const auto& e : g.edges()) F.edge_slopes.push_back(subtree_out.at(e.v));  // edges run parent -> child
  F.vertex_values[anchor] = anchor_value;
  std::deque<std::string> queue{anchor};
  while (!queue.empty()) {
    std::string x = queue.front();
    queue.pop_front();
    for (std::size_t i : g.incident_edges(x)) {
      const Edge& e = g.edges()[i];
      const std::string& y = e.u == x ? e.v : e.u;
      if (F.vertex_values.contains(y)) continue;
      F.vertex_values[y] = F.vertex_values.at(x) + F.outgoing_slope(g, i, x) * e.length;
      queue.push_back(y);
    }
  }
  return F;
}

}  // namespace skeletron
