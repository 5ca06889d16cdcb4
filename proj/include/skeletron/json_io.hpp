#pragma once

#include <nlohmann/json.hpp>

#include "skeletron/berkovich.hpp"
#include "skeletron/metric_graph.hpp"
#include "skeletron/puiseux.hpp"
#include "skeletron/slope_formula.hpp"
#include "skeletron/stable_reduction.hpp"
#include "skeletron/tropical.hpp"

// JSON interchange. Rationals are always "p/q" strings. Every *_from_json
// throws InputError on schema violations.
namespace skeletron::json_io {

using nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// [{"exp": "p/q", "coeff": "p/q"}, ...]; the text form is accepted on input.
json to_json(const Puiseux& a);
Puiseux puiseux_from_json(const json& j);

/// {"type":1,"value":<elem>|"inf"} or {"type":2,"center":<elem>,"s":"p/q"}
json to_json(const P1Point& p);
P1Point point_from_json(const json& j);

/// {"lead_val":"p/q","factors":[{"root":<elem>|"inf","mult":int}]}
json to_json(const RationalFunction& f);
RationalFunction function_from_json(const json& j);

/// {"terms":[{"n":int,"v":"p/q"}]}
json to_json(const TropicalLaurent& f);
TropicalLaurent laurent_from_json(const json& j);

/// {"lo":"p/q"|"-inf","hi":"p/q"|"+inf"}, optional "lo_closed"/"hi_closed".
json to_json(const Interval& i);
Interval interval_from_json(const json& j);
/// "lo,hi" with "-inf"/"+inf" allowed.
Interval interval_from_text(std::string_view text);

json to_json(const Breakpoint& b);
json to_json(const UnitData& u);

/// {"vertices":[{"id":str,"w":int}],"edges":[{"u":str,"v":str,"len":"p/q"}],
///  "rays":[{"base":str,"mark":str}]}
json to_json(const MetricGraph& g);
MetricGraph graph_from_json(const json& j);

json to_json(const PLFunction& f, const MetricGraph& g);
PLFunction pl_function_from_json(const json& j, const MetricGraph& g);

/// {"graph":..., "placement":{id: point}, "rays":{mark: point}}
json to_json(const SkeletonTree& t);

json to_json(const SlopeReport& r, const MetricGraph& g);
json to_json(const StabilizationReport& r);

}  // namespace skeletron::json_io
