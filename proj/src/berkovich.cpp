#include "skeletron/berkovich.hpp"

#include <algorithm>
#include <set>

namespace skeletron {

P1Point P1Point::k_point(Puiseux value) { return P1Point(Kind::kFinite, std::move(value), Rational(0)); }

P1Point P1Point::infinity() { return P1Point(Kind::kInfinity, Puiseux(), Rational(0)); }

P1Point P1Point::type2(const Puiseux& center, Rational s) {
  Puiseux reduced = center.truncated_below(s);
  return P1Point(Kind::kType2, std::move(reduced), std::move(s));
}

const Puiseux& P1Point::center() const {
  if (is_infinity()) throw InputError("the point at infinity has no center");
  return center_;
}

ValQ P1Point::radius() const { return is_type2() ? ValQ(s_) : ValQ::infinity(); }

bool operator<(const P1Point& a, const P1Point& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.is_type2() && a.s_ != b.s_) return a.s_ < b.s_;
  return a.center_ < b.center_;
}

std::string P1Point::to_string() const {
  switch (kind_) {
    case Kind::kFinite:
      return center_.to_string();
    case Kind::kInfinity:
      return "inf";
    case Kind::kType2:
      break;
  }
  return "zeta(" + center_.to_string() + ", " + (is_integer(s_) ? s_.get_str() : format_rational(s_)) + ")";
}

bool ball_contains(const P1Point& outer, const P1Point& inner) {
  if (!outer.is_type2() || inner.is_infinity()) return false;
  return inner.radius() >= outer.radius() && (inner.center() - outer.center()).valuation() >= outer.radius();
}

P1Point join(const P1Point& x, const P1Point& y) {
  if (x.is_infinity() || y.is_infinity()) throw InputError("join: the point at infinity is not allowed");
  if (x == y) return x;
  ValQ s = min(min(x.radius(), y.radius()), (x.center() - y.center()).valuation());
  return P1Point::type2(x.center(), s.value());
}

ValQ path_distance(const P1Point& x, const P1Point& y) {
  if (x == y) return ValQ(0);
  if (x.is_type1() || y.is_type1()) return ValQ::infinity();
  const P1Point j = join(x, y);
  return ValQ(Rational(x.radius().value() + y.radius().value() - 2 * j.radius().value()));
}

RationalFunction::RationalFunction(Rational lead_val, std::vector<Factor> factors) : lead_val_(std::move(lead_val)) {
  std::optional<int> listed_infinity;
  int finite_sum = 0;
  for (auto& f : factors) {
    if (f.mult == 0) throw InputError("rational function factor with multiplicity 0");
    if (!f.root) {
      if (listed_infinity) throw InputError("infinity listed twice among the factors");
      listed_infinity = f.mult;
      continue;
    }
    for (const auto& g : factors_) {
      if (*g.root == *f.root) throw InputError("repeated root " + f.root->to_string());
    }
    finite_sum += f.mult;
    factors_.push_back(std::move(f));
  }
  if (listed_infinity && *listed_infinity != -finite_sum) {
    throw InputError("order at infinity " + std::to_string(*listed_infinity) + " contradicts the degree identity (expected " +
                     std::to_string(-finite_sum) + ")");
  }
}

int RationalFunction::order_at_infinity() const {
  int sum = 0;
  for (const auto& f : factors_) sum += f.mult;
  return -sum;
}

int RationalFunction::order_at(const P1Point& point) const {
  if (point.is_infinity()) return order_at_infinity();
  if (!point.is_type1()) throw InputError("order_at needs a type-1 point");
  for (const auto& f : factors_) {
    if (*f.root == point.center()) return f.mult;
  }
  return 0;
}

std::vector<P1Point> RationalFunction::support() const {
  std::vector<P1Point> out;
  for (const auto& f : factors_) out.push_back(P1Point::k_point(*f.root));
  if (order_at_infinity() != 0) out.push_back(P1Point::infinity());
  return out;
}

Rational eval_val(const RationalFunction& f, const P1Point& x) {
  if (!x.is_type2()) throw InputError("eval_val needs a type-2 point, got " + x.to_string());
  Rational s = x.radius().value();
  Rational total = f.lead_val();
  for (const auto& factor : f.factors()) {
    ValQ d = (x.center() - *factor.root).valuation();
    total += factor.mult * (d < ValQ(s) ? d.value() : s);
  }
  return total;
}

std::optional<std::string> SkeletonTree::parent(const std::string& vertex) const {
  auto it = parent_.find(vertex);
  if (it == parent_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> SkeletonTree::vertex_at(const P1Point& point) const {
  for (const auto& [id, p] : placement_) {
    if (p == point) return id;
  }
  return std::nullopt;
}

const std::string& SkeletonTree::ray_base(const P1Point& puncture) const {
  const std::string mark = mark_for(puncture);
  for (const auto& r : graph_.rays()) {
    if (r.mark == mark) return r.base;
  }
  throw InputError(puncture.to_string() + " is not a puncture of the skeleton");
}

std::string SkeletonTree::mark_for(const P1Point& puncture) { return puncture.to_string(); }

namespace {

// Nearest hull point for a point that is neither ∞ nor a puncture. The hull
// meets the path from x toward ∞ in {ζ(c, s') : s' <= m}, clipped at the top
// vertex when ∞ is not a puncture.
P1Point hull_projection(const P1Point& x, std::span<const P1Point> anchors, bool has_infinity,
                        const std::optional<P1Point>& top) {
  const Puiseux& c = x.center();
  const ValQ r = x.radius();
  if (!has_infinity) {
    ValQ into_top = min(r, (c - top->center()).valuation());
    if (into_top < top->radius()) return *top;
  }
  ValQ m;
  bool first = true;
  for (const auto& a : anchors) {
    ValQ reach = min(a.radius(), (c - a.center()).valuation());
    m = first ? reach : max(m, reach);
    first = false;
  }
  ValQ s = min(r, m);
  if (s.is_infinite()) return x;
  return P1Point::type2(c, s.value());
}

}  // namespace

SkeletonTree build_skeleton_tree(std::span<const P1Point> punctures, std::span<const P1Point> extra_vertices) {
  if (punctures.size() < 2) throw InputError("a skeleton needs at least two punctures");
  SkeletonTree tree;
  for (std::size_t i = 0; i < punctures.size(); ++i) {
    const P1Point& p = punctures[i];
    if (!p.is_type1()) throw InputError("puncture " + p.to_string() + " is not a type-1 point");
    for (std::size_t j = 0; j < i; ++j) {
      if (punctures[j] == p) throw InputError("duplicate puncture " + p.to_string());
    }
    if (p.is_infinity()) {
      tree.has_infinity_ = true;
    } else {
      tree.anchors_.push_back(p);
    }
  }
  for (const auto& e : extra_vertices) {
    if (!e.is_type2()) throw InputError("extra vertex " + e.to_string() + " is not a type-2 point");
    tree.anchors_.push_back(e);
  }
  tree.punctures_.assign(punctures.begin(), punctures.end());

  std::optional<P1Point> top;
  if (!tree.has_infinity_) {
    top = tree.anchors_.front();
    for (const auto& a : tree.anchors_) top = join(*top, a);
  }

  std::set<P1Point> vertices(extra_vertices.begin(), extra_vertices.end());
  for (std::size_t i = 0; i < tree.anchors_.size(); ++i) {
    for (std::size_t j = i + 1; j < tree.anchors_.size(); ++j) {
      P1Point j_ab = join(tree.anchors_[i], tree.anchors_[j]);
      if (j_ab.is_type2()) vertices.insert(j_ab);
    }
  }
  vertices.insert(hull_projection(P1Point::gauss(), tree.anchors_, tree.has_infinity_, top));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<P1Point> current(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) grew |= vertices.insert(join(current[i], current[j])).second;
    }
  }

  std::vector<P1Point> ordered(vertices.begin(), vertices.end());
  auto id_of = [](std::size_t i) { return "v" + std::to_string(i); };
  std::vector<Vertex> graph_vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    graph_vertices.push_back({id_of(i), 0});
    tree.placement_.emplace(id_of(i), ordered[i]);
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < ordered.size(); ++j) {
      if (j != i && ball_contains(ordered[j], ordered[i]) &&
          (!best || ordered[*best].radius() < ordered[j].radius())) {
        best = j;
      }
    }
    if (best) {
      tree.parent_.emplace(id_of(i), id_of(*best));
      edges.push_back({id_of(*best), id_of(i), ordered[i].radius().value() - ordered[*best].radius().value()});
    } else {
      tree.top_ = id_of(i);
    }
  }

  std::vector<Ray> rays;
  for (const auto& p : punctures) {
    std::string base = tree.top_;
    if (!p.is_infinity()) {
      std::optional<std::size_t> best;
      for (std::size_t j = 0; j < ordered.size(); ++j) {
        if (ball_contains(ordered[j], p) && (!best || ordered[*best].radius() < ordered[j].radius())) best = j;
      }
      base = id_of(*best);
    }
    std::string mark = SkeletonTree::mark_for(p);
    rays.push_back({base, mark});
    tree.ray_targets_.emplace(mark, p);
  }
  tree.graph_ = MetricGraph(std::move(graph_vertices), std::move(edges), std::move(rays));
  return tree;
}

P1Point retract(const P1Point& x, const SkeletonTree& tree) {
  const P1Point& top = tree.placement(tree.top_);
  if (x.is_infinity()) return top;
  if (x.is_type1()) {
    for (const auto& p : tree.punctures_) {
      if (p == x) return tree.placement(tree.ray_base(p));
    }
  }
  std::optional<P1Point> clip;
  if (!tree.has_infinity_) clip = top;
  return hull_projection(x, tree.anchors_, tree.has_infinity_, clip);
}

}  // namespace skeletron
