#include "skeletron/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "skeletron/checks/acceptance.hpp"
#include "skeletron/json_io.hpp"

namespace skeletron::cli {

namespace {

using json_io::json;

// Flags take either inline JSON or a path to a JSON file.
json load_json(const std::string& text, const std::string& flag) {
  std::string body = text;
  std::string source = "inline " + flag;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  bool inline_json = first != std::string::npos && (text[first] == '{' || text[first] == '[' || text[first] == '"');
  if (!inline_json && std::filesystem::is_regular_file(text)) {
    std::ifstream in(text);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    body = buffer.str();
    source = text;
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + source + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::vector<P1Point> points_from_json(const json& j, const std::string& flag) {
  if (!j.is_array()) throw InputError(flag + " must be a JSON array of points");
  std::vector<P1Point> out;
  for (const auto& p : j) out.push_back(json_io::point_from_json(p));
  return out;
}

void write_plot(const std::string& path, const SkeletonTree& tree, const PLFunction& F) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot write plot table to " + path);
  const MetricGraph& g = tree.graph();
  os << "# segment\tslope\tlength\tdelta_F\n";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    Rational delta = F.vertex_values.at(e.v) - F.vertex_values.at(e.u);
    os << e.u << "-" << e.v << '\t' << F.edge_slopes[i] << '\t' << format_rational(e.length) << '\t'
       << format_rational(delta) << '\n';
  }
  for (const auto& r : g.rays()) os << r.base << "->" << r.mark << '\t' << F.ray_slopes.at(r.mark) << "\tinf\t-\n";
}

struct Options {
  std::string f, interval, point, punctures, extra, graph, val_j, plot;
  std::size_t samples = 20;
  std::uint64_t seed = 0x5eed;
};

int newton(const Options& o, std::ostream& out) {
  json j = load_json(o.f, "--f");
  TropicalLaurent f = json_io::laurent_from_json(j);
  Interval interval = Interval::whole_line();
  if (!o.interval.empty()) {
    interval = json_io::interval_from_text(o.interval);
  } else if (j.contains("interval")) {
    interval = json_io::interval_from_json(j.at("interval"));
  }
  json result;
  result["interval"] = json_io::to_json(interval);
  result["breakpoints"] = json::array();
  for (const auto& b : breakpoints(f, interval)) result["breakpoints"].push_back(json_io::to_json(b));
  auto unit = unit_decomposition(f, interval);
  result["unit"] = unit ? json_io::to_json(*unit) : json(nullptr);
  if (unit && unit->degree != 0) {
    result["image"] = json_io::to_json(map_skeleton(unit->degree, unit->val_alpha, interval));
  }
  out << result.dump(2) << '\n';
  return kOk;
}

int eval(const Options& o, std::ostream& out) {
  RationalFunction f = json_io::function_from_json(load_json(o.f, "--f"));
  P1Point x = json_io::point_from_json(load_json(o.point, "--point"));
  json result{{"point", json_io::to_json(x)}, {"val", json_io::to_json(eval_val(f, x))}};
  out << result.dump(2) << '\n';
  return kOk;
}

int skeleton(const Options& o, std::ostream& out) {
  auto d = points_from_json(load_json(o.punctures, "--punctures"), "--punctures");
  std::vector<P1Point> extra;
  if (!o.extra.empty()) extra = points_from_json(load_json(o.extra, "--extra"), "--extra");
  out << json_io::to_json(build_skeleton_tree(d, extra)).dump(2) << '\n';
  return kOk;
}

int slope_check(const Options& o, std::ostream& out, std::ostream& err) {
  RationalFunction f = json_io::function_from_json(load_json(o.f, "--f"));
  auto d = points_from_json(load_json(o.punctures, "--punctures"), "--punctures");
  SkeletonTree tree = build_skeleton_tree(d);
  SlopeCheckOptions options;
  options.samples = o.samples;
  options.seed = o.seed;
  SlopeReport report = verify_slope_formula(f, tree, options);
  if (!o.plot.empty()) write_plot(o.plot, tree, report.F);
  out << json_io::to_json(report, tree.graph()).dump(2) << '\n';
  if (!report.pass()) {
    err << "slope formula verification failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

int stabilize_cmd(const Options& o, std::ostream& out) {
  MetricGraph g = json_io::graph_from_json(load_json(o.graph, "--graph"));
  out << json_io::to_json(stabilize(g)).dump(2) << '\n';
  return kOk;
}

int tate(const Options& o, std::ostream& out) {
  out << json_io::to_json(tate_skeleton(parse_rational(o.val_j))).dump(2) << '\n';
  return kOk;
}

int selftest(const Options& o, std::ostream& out) {
  std::optional<std::filesystem::path> fixtures;
  if (const char* dir = std::getenv("SKELETRON_FIXTURES"); dir != nullptr && *dir != '\0') fixtures = dir;
  return checks::run_acceptance(o.seed, fixtures, out) ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact skeleta of Berkovich curves and the Slope Formula", "skeletron"};
  app.require_subcommand(1, 1);
  Options o;

  auto* cmd_newton = app.add_subcommand("newton", "Breakpoints and unit data of a Newton polygon on an interval");
  cmd_newton->add_option("--f", o.f, "{\"terms\":[{\"n\":int,\"v\":\"p/q\"}]} (inline or file)")->required();
  cmd_newton->add_option("--interval", o.interval, "lo,hi (default: the JSON's interval, else the whole line)");

  auto* cmd_eval = app.add_subcommand("eval", "val f at a type-2 point");
  cmd_eval->add_option("--f", o.f, "rational function JSON")->required();
  cmd_eval->add_option("--point", o.point, "point JSON")->required();

  auto* cmd_skeleton = app.add_subcommand("skeleton", "Skeleton tree of P1 minus punctures");
  cmd_skeleton->add_option("--punctures", o.punctures, "JSON array of type-1 points")->required();
  cmd_skeleton->add_option("--extra", o.extra, "JSON array of extra type-2 vertices");

  auto* cmd_slope = app.add_subcommand("slope-check", "Verify the Slope Formula for f on a skeleton");
  cmd_slope->add_option("--f", o.f, "rational function JSON")->required();
  cmd_slope->add_option("--punctures", o.punctures, "JSON array of type-1 points")->required();
  cmd_slope->add_option("--samples", o.samples, "off-skeleton retraction samples");
  cmd_slope->add_option("--seed", o.seed, "64-bit seed");
  cmd_slope->add_option("--emit-plot", o.plot, "write a (segment, slope, length, delta F) table");

  auto* cmd_stabilize = app.add_subcommand("stabilize", "Prune a marked weighted metric graph to its stable model");
  cmd_stabilize->add_option("--graph", o.graph, "graph JSON")->required();

  auto* cmd_tate = app.add_subcommand("tate", "Skeleton of an elliptic curve from val(j)");
  cmd_tate->add_option("--val-j", o.val_j, "p/q")->required();

  auto* cmd_selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  cmd_selftest->add_option("--seed", o.seed, "64-bit seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (cmd_newton->parsed()) return newton(o, out);
    if (cmd_eval->parsed()) return eval(o, out);
    if (cmd_skeleton->parsed()) return skeleton(o, out);
    if (cmd_slope->parsed()) return slope_check(o, out, err);
    if (cmd_stabilize->parsed()) return stabilize_cmd(o, out);
    if (cmd_tate->parsed()) return tate(o, out);
    if (cmd_selftest->parsed()) return selftest(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const SlopeError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace skeletron::cli
