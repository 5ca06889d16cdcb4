#include "skeletron/metric_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace skeletron {

MetricGraph::MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<Ray> rays)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), rays_(std::move(rays)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].weight < 0) throw InputError("vertex '" + vertices_[i].id + "' has negative weight");
    if (!index_.emplace(vertices_[i].id, i).second) throw InputError("duplicate vertex id '" + vertices_[i].id + "'");
  }
  for (const auto& e : edges_) {
    if (!has_vertex(e.u) || !has_vertex(e.v)) throw InputError("edge " + e.u + "-" + e.v + " has an unknown endpoint");
    if (e.length <= 0) throw InputError("edge " + e.u + "-" + e.v + " must have positive length");
  }
  std::set<std::string> marks;
  for (const auto& r : rays_) {
    if (!has_vertex(r.base)) throw InputError("ray '" + r.mark + "' has unknown base '" + r.base + "'");
    if (!marks.insert(r.mark).second) throw InputError("duplicate ray mark '" + r.mark + "'");
  }
}

bool MetricGraph::has_vertex(const std::string& id) const { return index_.contains(id); }

std::size_t MetricGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown vertex '" + id + "'");
  return it->second;
}

int MetricGraph::weight(const std::string& id) const { return vertices_[index_of(id)].weight; }

int MetricGraph::valence(const std::string& id) const {
  index_of(id);
  int val = 0;
  for (const auto& e : edges_) val += (e.u == id) + (e.v == id);
  for (const auto& r : rays_) val += r.base == id;
  return val;
}

std::vector<std::size_t> MetricGraph::incident_edges(const std::string& id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == id || edges_[i].v == id) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> MetricGraph::incident_rays(const std::string& id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].base == id) out.push_back(i);
  }
  return out;
}

bool MetricGraph::is_connected() const {
  if (vertices_.empty()) return false;
  std::vector<std::vector<std::size_t>> adj(vertices_.size());
  for (const auto& e : edges_) {
    adj[index_of(e.u)].push_back(index_of(e.v));
    adj[index_of(e.v)].push_back(index_of(e.u));
  }
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == vertices_.size();
}

int betti1(const MetricGraph& g) {
  if (!g.is_connected()) throw InputError("betti1: graph is not connected");
  return static_cast<int>(g.edges().size()) - static_cast<int>(g.vertices().size()) + 1;
}

int total_genus(const MetricGraph& g) {
  int genus = betti1(g);
  for (const auto& v : g.vertices()) genus += v.weight;
  return genus;
}

int euler_char(const MetricGraph& g) { return 2 - 2 * total_genus(g) - static_cast<int>(g.rays().size()); }

MetricGraph refine(const MetricGraph& g, std::size_t edge_index, const Rational& position) {
  if (edge_index >= g.edges().size()) throw InputError("refine: edge index out of range");
  const Edge& old = g.edges()[edge_index];
  if (position <= 0 || position >= old.length) {
    throw InputError("refine: position " + format_rational(position) + " outside (0, " +
                     format_rational(old.length) + ")");
  }
  std::string fresh;
  for (std::size_t k = g.vertices().size();; ++k) {
    fresh = "x" + std::to_string(k);
    if (!g.has_vertex(fresh)) break;
  }
  std::vector<Vertex> vertices = g.vertices();
  vertices.push_back({fresh, 0});
  std::vector<Edge> edges = g.edges();
  edges[edge_index] = {old.u, fresh, position};
  edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(edge_index) + 1, Edge{fresh, old.v, old.length - position});
  return MetricGraph(std::move(vertices), std::move(edges), g.rays());
}

Rational shortest_path(const MetricGraph& g, const std::string& u, const std::string& v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InputError("shortest_path: unknown vertex");
  if (!g.is_connected()) throw InputError("shortest_path: graph is not connected");
  std::map<std::string, std::vector<std::pair<std::string, Rational>>> adj;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.u].emplace_back(e.v, e.length);
    adj[e.v].emplace_back(e.u, e.length);
  }
  std::map<std::string, Rational> dist;
  using Item = std::pair<Rational, std::string>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[u] = 0;
  queue.emplace(Rational(0), u);
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d > dist[x]) continue;
    if (x == v) return d;
    for (const auto& [y, len] : adj[x]) {
      Rational nd = d + len;
      auto it = dist.find(y);
      if (it == dist.end() || nd < it->second) {
        dist[y] = nd;
        queue.emplace(nd, y);
      }
    }
  }
  return dist.at(v);
}

namespace {

struct IsoData {
  std::vector<int> weights;
  std::vector<std::vector<std::string>> marks;
  std::vector<int> valence;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> lengths;
};

IsoData iso_data(const MetricGraph& g) {
  IsoData d;
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    idx[g.vertices()[i].id] = i;
    d.weights.push_back(g.vertices()[i].weight);
    d.valence.push_back(g.valence(g.vertices()[i].id));
  }
  d.marks.resize(g.vertices().size());
  for (const auto& r : g.rays()) d.marks[idx[r.base]].push_back(r.mark);
  for (auto& m : d.marks) std::sort(m.begin(), m.end());
  for (const auto& e : g.edges()) {
    std::size_t a = idx[e.u], b = idx[e.v];
    d.lengths[{std::min(a, b), std::max(a, b)}].push_back(e.length);
  }
  for (auto& [key, lens] : d.lengths) std::sort(lens.begin(), lens.end());
  return d;
}

const std::vector<Rational>& lengths_between(const IsoData& d, std::size_t a, std::size_t b) {
  static const std::vector<Rational> kNone;
  auto it = d.lengths.find({std::min(a, b), std::max(a, b)});
  return it == d.lengths.end() ? kNone : it->second;
}

bool extend(const IsoData& a, const IsoData& b, std::vector<std::size_t>& map, std::vector<bool>& used,
            std::size_t next) {
  if (next == map.size()) return true;
  for (std::size_t j = 0; j < map.size(); ++j) {
    if (used[j] || a.weights[next] != b.weights[j] || a.valence[next] != b.valence[j] ||
        a.marks[next] != b.marks[j]) {
      continue;
    }
    bool ok = lengths_between(a, next, next) == lengths_between(b, j, j);
    for (std::size_t i = 0; ok && i < next; ++i) {
      ok = lengths_between(a, i, next) == lengths_between(b, map[i], j);
    }
    if (!ok) continue;
    map[next] = j;
    used[j] = true;
    if (extend(a, b, map, used, next + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const MetricGraph& a, const MetricGraph& b) {
  if (a.vertices().size() > kMaxIsomorphismVertices || b.vertices().size() > kMaxIsomorphismVertices) {
    throw InputError("is_isomorphic: more than " + std::to_string(kMaxIsomorphismVertices) + " vertices");
  }
  if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size() ||
      a.rays().size() != b.rays().size()) {
    return false;
  }
  IsoData da = iso_data(a);
  IsoData db = iso_data(b);
  std::vector<std::size_t> map(a.vertices().size());
  std::vector<bool> used(a.vertices().size(), false);
  return extend(da, db, map, used, 0);
}

bool is_strongly_semistable(const MetricGraph& g) {
  return std::none_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
}

MetricGraph make_loopless(const MetricGraph& g) {
  MetricGraph out = g;
  for (std::size_t i = 0; i < out.edges().size(); ++i) {
    if (out.edges()[i].is_loop()) out = refine(out, i, out.edges()[i].length / 2);
  }
  return out;
}

int PLFunction::outgoing_slope(const MetricGraph& g, std::size_t edge_index, const std::string& from) const {
  const Edge& e = g.edges().at(edge_index);
  int s = edge_slopes.at(edge_index);
  if (e.u == from) return s;
  if (e.v == from) return -s;
  throw InputError("outgoing_slope: vertex '" + from + "' is not an end of the edge");
}

bool is_consistent(const PLFunction& f, const MetricGraph& g) {
  if (f.edge_slopes.size() != g.edges().size()) return false;
  for (const auto& v : g.vertices()) {
    if (!f.vertex_values.contains(v.id)) return false;
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (f.vertex_values.at(e.v) - f.vertex_values.at(e.u) != f.edge_slopes[i] * e.length) return false;
  }
  for (const auto& r : g.rays()) {
    if (!f.ray_slopes.contains(r.mark)) return false;
  }
  return true;
}

}  // namespace skeletron
