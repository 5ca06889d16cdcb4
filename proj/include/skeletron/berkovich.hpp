#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skeletron/metric_graph.hpp"
#include "skeletron/puiseux.hpp"
#include "skeletron/rational.hpp"

namespace skeletron {

/// A point of the Berkovich projective line that is finitely representable:
/// a K-point, the point ∞, or a type-2 point ζ(b, s), the Gauss point of
/// the closed ball {val(T - b) >= s}. The valuative radius s is the
/// negative log of the diameter.
///
/// Type-2 centers are stored reduced modulo the ball: every monomial of
/// exponent >= s is dropped, so equality is syntactic.
class P1Point {
 public:
  enum class Kind { kFinite, kInfinity, kType2 };

  static P1Point k_point(Puiseux value);
  static P1Point infinity();
  static P1Point type2(const Puiseux& center, Rational s);
  static P1Point gauss() { return type2(Puiseux(), 0); }

  Kind kind() const { return kind_; }
  bool is_type1() const { return kind_ != Kind::kType2; }
  bool is_infinity() const { return kind_ == Kind::kInfinity; }
  bool is_type2() const { return kind_ == Kind::kType2; }

  /// The K-point itself, or the reduced center of a type-2 point.
  const Puiseux& center() const;
  /// s for type-2 points, +∞ for K-points.
  ValQ radius() const;

  friend bool operator==(const P1Point&, const P1Point&) = default;
  /// Deterministic order: by kind, radius, then center.
  friend bool operator<(const P1Point& a, const P1Point& b);

  std::string to_string() const;

 private:
  P1Point(Kind kind, Puiseux center, Rational s) : kind_(kind), center_(std::move(center)), s_(std::move(s)) {}

  Kind kind_;
  Puiseux center_;
  Rational s_;  // meaningful for kType2 only
};

/// True iff `inner` lies in the closed ball of the type-2 point `outer`,
/// i.e. `outer` is on the path from `inner` to ∞.
bool ball_contains(const P1Point& outer, const P1Point& inner);

/// Gauss point of the smallest closed ball containing both points. K-points
/// count as balls of radius +∞; the join of a K-point with itself is that
/// K-point. Throws InputError on ∞.
P1Point join(const P1Point& x, const P1Point& y);

/// Path distance s_x + s_y - 2 s_join in valuative coordinates; +∞ when a
/// K-point or ∞ is involved (unless x == y).
ValQ path_distance(const P1Point& x, const P1Point& y);

/// A zero (mult > 0) or pole (mult < 0). A missing root means ∞.
struct Factor {
  std::optional<Puiseux> root;
  int mult;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// f = c · Π (T - a_i)^{m_i}, stored as val(c) and the finite factors.
/// The order at ∞ is -Σ m_i; a listed ∞ factor must agree with it.
class RationalFunction {
 public:
  RationalFunction(Rational lead_val, std::vector<Factor> factors);

  const Rational& lead_val() const { return lead_val_; }
  /// Finite factors only, in input order.
  const std::vector<Factor>& factors() const { return factors_; }

  int order_at_infinity() const;
  /// Order at a type-1 point (0 when it is neither a zero nor a pole).
  int order_at(const P1Point& point) const;
  /// Zeros and poles as type-1 points, ∞ included when its order is
  /// nonzero.
  std::vector<P1Point> support() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Rational lead_val_;
  std::vector<Factor> factors_;
};

/// val f(x) at a type-2 point: lead_val + Σ m_i · min(val(b - a_i), s).
/// Throws InputError for type-1 points.
Rational eval_val(const RationalFunction& f, const P1Point& x);

/// Skeleton of P¹ minus a finite set D of K-points (∞ allowed): the convex
/// hull of D together with any extra type-2 points, as a metric tree whose
/// vertices are placed at type-2 points and whose rays end at the
/// punctures.
///
/// Vertices are ordered by placement and named v0, v1, ...; the ray to a
/// puncture is marked with the puncture's text form ("inf" for ∞).
class SkeletonTree {
 public:
  const MetricGraph& graph() const { return graph_; }
  const std::map<std::string, P1Point>& placement() const { return placement_; }
  const P1Point& placement(const std::string& vertex) const { return placement_.at(vertex); }
  /// mark -> puncture
  const std::map<std::string, P1Point>& ray_targets() const { return ray_targets_; }
  const std::vector<P1Point>& punctures() const { return punctures_; }

  /// Vertex nearest ∞ (the base of the ∞ ray when ∞ is a puncture).
  const std::string& top() const { return top_; }
  /// Parent toward ∞; absent for the top vertex.
  std::optional<std::string> parent(const std::string& vertex) const;
  bool has_infinity() const { return has_infinity_; }

  /// Vertex whose placement equals `point`, if any.
  std::optional<std::string> vertex_at(const P1Point& point) const;
  /// Base vertex of the ray running to `puncture`.
  const std::string& ray_base(const P1Point& puncture) const;

  static std::string mark_for(const P1Point& puncture);

 private:
  friend SkeletonTree build_skeleton_tree(std::span<const P1Point>, std::span<const P1Point>);
  friend P1Point retract(const P1Point&, const SkeletonTree&);

  MetricGraph graph_;
  std::map<std::string, P1Point> placement_;
  std::map<std::string, P1Point> ray_targets_;
  std::map<std::string, std::string> parent_;
  std::vector<P1Point> punctures_;
  std::vector<P1Point> anchors_;  // finite punctures and extra points spanning the hull
  std::string top_;
  bool has_infinity_ = false;
};

/// Builds the skeleton spanned by `punctures` (>= 2 distinct type-1
/// points) and `extra_vertices` (type-2). The vertex set is closed under
/// joins and always contains the retraction of the Gauss point.
SkeletonTree build_skeleton_tree(std::span<const P1Point> punctures, std::span<const P1Point> extra_vertices = {});

/// Nearest point of the skeleton (rays included). A puncture retracts to
/// the base vertex of its ray.
P1Point retract(const P1Point& x, const SkeletonTree& tree);

}  // namespace skeletron
