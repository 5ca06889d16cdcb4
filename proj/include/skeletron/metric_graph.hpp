#pragma once

#include <map>
#include <string>
#include <vector>

#include "skeletron/rational.hpp"

namespace skeletron {

struct Vertex {
  std::string id;
  int weight = 0;  // genus of the vertex

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A finite segment. u == v is a loop; parallel edges are allowed.
struct Edge {
  std::string u;
  std::string v;
  Rational length;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An edge of infinite length running from `base` to the marked point
/// `mark`.
struct Ray {
  std::string base;
  std::string mark;

  friend bool operator==(const Ray&, const Ray&) = default;
};

/// Vertex-weighted metric graph with rational edge lengths and marked
/// rays. The constructor enforces the local invariants (unique ids, known
/// endpoints, positive lengths, distinct marks, nonnegative weights);
/// connectivity is checked by the operations that need it.
class MetricGraph {
 public:
  MetricGraph() = default;
  MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Ray> rays);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Ray>& rays() const { return rays_; }

  bool has_vertex(const std::string& id) const;
  int weight(const std::string& id) const;
  /// Incident edge-ends (a loop counts twice) plus incident rays.
  int valence(const std::string& id) const;
  std::vector<std::size_t> incident_edges(const std::string& id) const;
  std::vector<std::size_t> incident_rays(const std::string& id) const;

  bool is_connected() const;

  friend bool operator==(const MetricGraph&, const MetricGraph&) = default;

 private:
  std::size_t index_of(const std::string& id) const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Ray> rays_;
  std::map<std::string, std::size_t> index_;
};

/// First Betti number E - V + 1 (rays excluded). Throws InputError on a
/// disconnected graph.
int betti1(const MetricGraph& g);
/// Sum of vertex weights plus betti1.
int total_genus(const MetricGraph& g);
/// 2 - 2 * total_genus - #rays.
int euler_char(const MetricGraph& g);

/// Splits edge `edge_index` at distance `position` from its u end by a
/// fresh weight-0 vertex. Requires 0 < position < length.
MetricGraph refine(const MetricGraph& g, std::size_t edge_index, const Rational& position);

/// Exact shortest-path distance between two vertices.
Rational shortest_path(const MetricGraph& g, const std::string& u, const std::string& v);

/// Brute-force isomorphism test preserving weights, ray marks and the
/// multiset of edge lengths between every vertex pair. Both graphs must
/// have at most kMaxIsomorphismVertices vertices.
inline constexpr std::size_t kMaxIsomorphismVertices = 12;
bool is_isomorphic(const MetricGraph& a, const MetricGraph& b);

bool is_strongly_semistable(const MetricGraph& g);
/// Splits every loop at its midpoint.
MetricGraph make_loopless(const MetricGraph& g);

/// A function on the graph that is affine with integer slope on every edge.
/// Edge slopes are index-aligned with graph.edges() and oriented u -> v;
/// ray slopes are outgoing from the base vertex, keyed by mark.
struct PLFunction {
  std::map<std::string, Rational> vertex_values;
  std::vector<int> edge_slopes;
  std::map<std::string, int> ray_slopes;

  /// Slope of edge `edge_index` leaving `from` (negated for the v end).
  int outgoing_slope(const MetricGraph& g, std::size_t edge_index, const std::string& from) const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;
};

/// value(v) - value(u) == slope(u -> v) * length for every edge, and every
/// vertex and ray has data.
bool is_consistent(const PLFunction& f, const MetricGraph& g);

}  // namespace skeletron
