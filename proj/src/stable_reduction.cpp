#include "skeletron/stable_reduction.hpp"

#include <algorithm>

namespace skeletron {

std::string to_string(PruneRule rule) { return rule == PruneRule::kValence1 ? "valence1" : "valence2"; }

namespace {

bool valence1_applies(const MetricGraph& g, const std::string& id) {
  if (g.weight(id) != 0 || g.valence(id) != 1) return false;
  auto edges = g.incident_edges(id);
  return edges.size() == 1;  // a lone ray ends at a marking
}

bool valence2_applies(const MetricGraph& g, const std::string& id) {
  if (g.weight(id) != 0 || g.valence(id) != 2) return false;
  auto edges = g.incident_edges(id);
  if (std::any_of(edges.begin(), edges.end(), [&](std::size_t i) { return g.edges()[i].is_loop(); })) return false;
  return g.incident_rays(id).size() < 2;
}

const std::string& other_end(const Edge& e, const std::string& id) { return e.u == id ? e.v : e.u; }

}  // namespace

std::vector<PruneStep> prune_candidates(const MetricGraph& g) {
  std::vector<std::string> ids;
  for (const auto& v : g.vertices()) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  std::vector<PruneStep> out;
  for (const auto& id : ids) {
    if (valence1_applies(g, id)) out.push_back({PruneRule::kValence1, id});
  }
  for (const auto& id : ids) {
    if (valence2_applies(g, id)) out.push_back({PruneRule::kValence2, id});
  }
  return out;
}

MetricGraph apply_prune(const MetricGraph& g, const PruneStep& step) {
  const std::string& x = step.vertex;
  bool allowed = step.rule == PruneRule::kValence1 ? valence1_applies(g, x) : valence2_applies(g, x);
  if (!allowed) throw InputError("prune rule " + to_string(step.rule) + " does not apply to vertex '" + x + "'");

  std::vector<Vertex> vertices;
  for (const auto& v : g.vertices()) {
    if (v.id != x) vertices.push_back(v);
  }
  std::vector<Edge> edges;
  std::vector<Ray> rays = g.rays();
  auto incident = g.incident_edges(x);

  if (step.rule == PruneRule::kValence1) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      if (i != incident.front()) edges.push_back(g.edges()[i]);
    }
    return MetricGraph(std::move(vertices), std::move(edges), std::move(rays));
  }

  auto ray_at_x = g.incident_rays(x);
  if (!ray_at_x.empty()) {
    // edge + ray: the ray now starts at the edge's far end
    const Edge& e = g.edges()[incident.front()];
    rays[ray_at_x.front()].base = other_end(e, x);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      if (i != incident.front()) edges.push_back(g.edges()[i]);
    }
    return MetricGraph(std::move(vertices), std::move(edges), std::move(rays));
  }

  const Edge& e1 = g.edges()[incident[0]];
  const Edge& e2 = g.edges()[incident[1]];
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i == incident[0]) {
      edges.push_back({other_end(e1, x), other_end(e2, x), e1.length + e2.length});
    } else if (i != incident[1]) {
      edges.push_back(g.edges()[i]);
    }
  }
  return MetricGraph(std::move(vertices), std::move(edges), std::move(rays));
}

std::optional<std::pair<MetricGraph, PruneStep>> prune_step(const MetricGraph& g) {
  auto candidates = prune_candidates(g);
  if (candidates.empty()) return std::nullopt;
  return std::make_pair(apply_prune(g, candidates.front()), candidates.front());
}

StabilizationReport stabilize(const MetricGraph& g) {
  const int chi = euler_char(g);
  if (chi == 0) {
    throw NonUniqueMinimalSkeleton(
        "euler characteristic 0: either genus 0 with 2 marked points (a line from 0 to inf, every type-2 point on it "
        "is a minimal vertex set) or genus 1 with no marked points (an elliptic curve); the minimal vertex set is not "
        "unique, so there is no stable vertex set to compute");
  }
  if (chi > 0) {
    throw InputError("euler characteristic " + std::to_string(chi) + " > 0: no semistable vertex set to stabilize");
  }
  StabilizationReport report{g, g, {}, chi};
  while (auto next = prune_step(report.output)) {
    report.output = std::move(next->first);
    report.steps.push_back(std::move(next->second));
  }
  return report;
}

std::set<std::string> minimal_vertex_characterization(const MetricGraph& g) {
  std::set<std::string> out;
  for (const auto& v : g.vertices()) {
    if (v.weight > 0 || g.valence(v.id) >= 3) out.insert(v.id);
  }
  return out;
}

bool is_stable(const MetricGraph& g) { return minimal_vertex_characterization(g).size() == g.vertices().size(); }

MetricGraph tate_skeleton(const Rational& val_j) {
  if (val_j >= 0) return MetricGraph({{"v0", 1}}, {}, {});
  return MetricGraph({{"v0", 0}}, {{"v0", "v0", -val_j}}, {});
}

Tropicalization abstract_tropicalization(int genus, int markings, const MetricGraph& graph) {
  if (genus < 0 || markings < 0) throw InputError("genus and number of markings must be nonnegative");
  const int chi = 2 - 2 * genus - markings;
  if (chi > 0) throw InputError("2 - 2g - n = " + std::to_string(chi) + " > 0: no tropicalization");
  if (static_cast<int>(graph.rays().size()) != markings) {
    throw InputError("graph has " + std::to_string(graph.rays().size()) + " rays, expected n = " +
                     std::to_string(markings));
  }
  if (total_genus(graph) != genus) {
    throw InputError("graph has total genus " + std::to_string(total_genus(graph)) + ", expected g = " +
                     std::to_string(genus));
  }
  if (chi == 0) return {graph, false, true};
  return {stabilize(graph).output, true, false};
}

}  // namespace skeletron
