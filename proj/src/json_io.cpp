#include "skeletron/json_io.hpp"

namespace skeletron::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "' in " + j.dump());
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<Rational> bound_from_json(const json& j, const char* infinite_text) {
  if (j.is_string() && (j.get<std::string>() == infinite_text || j.get<std::string>() == std::string(infinite_text).substr(1))) {
    return std::nullopt;
  }
  return rational_from_json(j);
}

}  // namespace

json to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a \"p/q\" rational, got " + j.dump());
}

json to_json(const Puiseux& a) {
  json out = json::array();
  for (const auto& [e, c] : a.terms()) out.push_back({{"exp", to_json(e)}, {"coeff", to_json(c)}});
  return out;
}

Puiseux puiseux_from_json(const json& j) {
  if (j.is_string()) return Puiseux::parse(j.get<std::string>());
  if (j.is_number_integer()) return Puiseux(Rational(j.get<long>()));
  if (!j.is_array()) throw InputError("expected a field element (array of {exp, coeff}), got " + j.dump());
  Puiseux out;
  for (const auto& term : j) {
    out += Puiseux::monomial(rational_from_json(field(term, "coeff")), rational_from_json(field(term, "exp")));
  }
  return out;
}

json to_json(const P1Point& p) {
  if (p.is_infinity()) return {{"type", 1}, {"value", "inf"}};
  if (p.is_type1()) return {{"type", 1}, {"value", to_json(p.center())}};
  return {{"type", 2}, {"center", to_json(p.center())}, {"s", to_json(p.radius().value())}};
}

P1Point point_from_json(const json& j) {
  int type = int_field(j, "type");
  if (type == 1) {
    const json& v = field(j, "value");
    if (v.is_string() && v.get<std::string>() == "inf") return P1Point::infinity();
    return P1Point::k_point(puiseux_from_json(v));
  }
  if (type == 2) return P1Point::type2(puiseux_from_json(field(j, "center")), rational_from_json(field(j, "s")));
  throw InputError("point type must be 1 or 2, got " + std::to_string(type));
}

json to_json(const RationalFunction& f) {
  json factors = json::array();
  for (const auto& factor : f.factors()) factors.push_back({{"root", to_json(*factor.root)}, {"mult", factor.mult}});
  return {{"lead_val", to_json(f.lead_val())}, {"factors", factors}};
}

RationalFunction function_from_json(const json& j) {
  std::vector<Factor> factors;
  const json& list = field(j, "factors");
  if (!list.is_array()) throw InputError("'factors' must be an array");
  for (const auto& item : list) {
    const json& root = field(item, "root");
    std::optional<Puiseux> value;
    if (!(root.is_string() && root.get<std::string>() == "inf")) value = puiseux_from_json(root);
    factors.push_back({std::move(value), int_field(item, "mult")});
  }
  return RationalFunction(rational_from_json(field(j, "lead_val")), std::move(factors));
}

json to_json(const TropicalLaurent& f) {
  json terms = json::array();
  for (const auto& [n, v] : f.terms()) terms.push_back({{"n", n}, {"v", to_json(v)}});
  return {{"terms", terms}};
}

TropicalLaurent laurent_from_json(const json& j) {
  TropicalLaurent::TermMap terms;
  const json& list = field(j, "terms");
  if (!list.is_array()) throw InputError("'terms' must be an array");
  for (const auto& item : list) {
    if (!terms.emplace(int_field(item, "n"), rational_from_json(field(item, "v"))).second) {
      throw InputError("exponent listed twice in tropical Laurent series");
    }
  }
  return TropicalLaurent(std::move(terms));
}

json to_json(const Interval& i) {
  return {{"lo", i.lo() ? to_json(*i.lo()) : json("-inf")},
          {"hi", i.hi() ? to_json(*i.hi()) : json("+inf")},
          {"lo_closed", i.lo_closed()},
          {"hi_closed", i.hi_closed()}};
}

Interval interval_from_json(const json& j) {
  auto lo = bound_from_json(field(j, "lo"), "-inf");
  auto hi = bound_from_json(field(j, "hi"), "+inf");
  bool lo_closed = j.value("lo_closed", true);
  bool hi_closed = j.value("hi_closed", true);
  return Interval(lo, hi, lo_closed, hi_closed);
}

Interval interval_from_text(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw InputError("interval must be 'lo,hi'");
  return interval_from_json({{"lo", std::string(text.substr(0, comma))}, {"hi", std::string(text.substr(comma + 1))}});
}

json to_json(const Breakpoint& b) {
  return {{"s", to_json(b.s)}, {"slope_left", b.slope_left}, {"slope_right", b.slope_right}};
}

json to_json(const UnitData& u) { return {{"d", u.degree}, {"val_alpha", to_json(u.val_alpha)}}; }

json to_json(const MetricGraph& g) {
  json vertices = json::array(), edges = json::array(), rays = json::array();
  for (const auto& v : g.vertices()) vertices.push_back({{"id", v.id}, {"w", v.weight}});
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"len", to_json(e.length)}});
  for (const auto& r : g.rays()) rays.push_back({{"base", r.base}, {"mark", r.mark}});
  return {{"vertices", vertices}, {"edges", edges}, {"rays", rays}};
}

MetricGraph graph_from_json(const json& j) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Ray> rays;
  for (const auto& v : field(j, "vertices")) vertices.push_back({string_field(v, "id"), v.contains("w") ? int_field(v, "w") : 0});
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      edges.push_back({string_field(e, "u"), string_field(e, "v"), rational_from_json(field(e, "len"))});
    }
  }
  if (j.contains("rays")) {
    for (const auto& r : j.at("rays")) rays.push_back({string_field(r, "base"), string_field(r, "mark")});
  }
  return MetricGraph(std::move(vertices), std::move(edges), std::move(rays));
}

json to_json(const PLFunction& f, const MetricGraph& g) {
  json values = json::object(), edges = json::array(), rays = json::object();
  for (const auto& [id, value] : f.vertex_values) values[id] = to_json(value);
  for (std::size_t i = 0; i < f.edge_slopes.size(); ++i) {
    const Edge& e = g.edges().at(i);
    edges.push_back({{"u", e.u}, {"v", e.v}, {"slope", f.edge_slopes[i]}});
  }
  for (const auto& [mark, slope] : f.ray_slopes) rays[mark] = slope;
  return {{"vertex_values", values}, {"edge_slopes", edges}, {"ray_slopes", rays}};
}

PLFunction pl_function_from_json(const json& j, const MetricGraph& g) {
  PLFunction f;
  for (const auto& [id, value] : field(j, "vertex_values").items()) f.vertex_values[id] = rational_from_json(value);
  const json& edges = field(j, "edge_slopes");
  if (edges.size() != g.edges().size()) throw InputError("edge_slopes must list every edge of the graph");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int slope = int_field(edges[i], "slope");
    const Edge& e = g.edges()[i];
    if (string_field(edges[i], "u") == e.v && string_field(edges[i], "v") == e.u && !e.is_loop()) slope = -slope;
    f.edge_slopes.push_back(slope);
  }
  for (const auto& [mark, slope] : field(j, "ray_slopes").items()) f.ray_slopes[mark] = slope.get<int>();
  return f;
}

json to_json(const SkeletonTree& t) {
  json placement = json::object(), rays = json::object();
  for (const auto& [id, p] : t.placement()) placement[id] = to_json(p);
  for (const auto& [mark, p] : t.ray_targets()) rays[mark] = to_json(p);
  return {{"graph", to_json(t.graph())}, {"placement", placement}, {"rays", rays}};
}

json to_json(const SlopeReport& r, const MetricGraph& g) {
  json harmonicity = json::object(), rays = json::array(), samples = json::array();
  for (const auto& [id, sum] : r.harmonicity) harmonicity[id] = sum;
  for (const auto& ray : r.rays) {
    rays.push_back({{"mark", ray.mark}, {"slope", ray.slope}, {"expected_order", ray.expected_order}, {"match", ray.match}});
  }
  for (const auto& s : r.samples) {
    samples.push_back({{"point", to_json(s.point)},
                       {"retraction", to_json(s.retraction)},
                       {"F", to_json(s.value)},
                       {"F_retraction", to_json(s.retracted_value)},
                       {"match", s.match}});
  }
  return {{"F", to_json(r.F, g)},
          {"harmonicity", harmonicity},
          {"rays", rays},
          {"samples", samples},
          {"integer_slopes", r.integer_slopes},
          {"ray_slope_sum", r.ray_slope_sum},
          {"verdict", r.pass() ? "pass" : "fail"}};
}

json to_json(const StabilizationReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) steps.push_back({{"rule", to_string(s.rule)}, {"vertex", s.vertex}});
  return {{"input", to_json(r.input)}, {"output", to_json(r.output)}, {"steps", steps}, {"chi", r.chi}};
}

}  // namespace skeletron::json_io
