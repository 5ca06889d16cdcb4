#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "skeletron/cli.hpp"
#include "skeletron/json_io.hpp"

using namespace skeletron;
using json_io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kWorkedF =
    R"({"lead_val":"0/1","factors":[{"root":"0","mult":1},{"root":"t","mult":1},{"root":"1","mult":-2}]})";
const std::string kWorkedD =
    R"([{"type":1,"value":"0"},{"type":1,"value":"t"},{"type":1,"value":"1"},{"type":1,"value":"inf"}])";

}  // namespace

TEST(Cli, TateCircle) {
  Result r = run({"tate", "--val-j", "-5/1"});
  ASSERT_EQ(r.code, 0) << r.err;
  MetricGraph g = json_io::graph_from_json(json::parse(r.out));
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_TRUE(g.edges()[0].is_loop());
  EXPECT_EQ(g.edges()[0].length, 5);
  EXPECT_EQ(run({"tate", "--val-j=-5/1"}).out, r.out);
}

TEST(Cli, SlopeCheckWorkedFixture) {
  Result r = run({"slope-check", "--f", kWorkedF, "--punctures", kWorkedD, "--samples", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("verdict"), "pass");
}

TEST(Cli, SlopeCheckFromFixtureFile) {
  std::ifstream in(std::string(SKELETRON_FIXTURE_DIR) + "/worked_example.json");
  json fixture = json::parse(in);
  auto dir = std::filesystem::temp_directory_path();
  auto f_path = dir / "skeletron_cli_f.json";
  std::ofstream(f_path) << fixture.at("f").dump();
  Result r = run({"slope-check", "--f", f_path.string(), "--punctures", fixture.at("punctures").dump()});
  EXPECT_EQ(r.code, 0) << r.err;
  std::filesystem::remove(f_path);
}

TEST(Cli, SlopeCheckIsDeterministic) {
  std::vector<std::string> args{"slope-check", "--f", kWorkedF, "--punctures", kWorkedD, "--samples", "8", "--seed", "77"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, EmitPlotWritesTable) {
  auto path = std::filesystem::temp_directory_path() / "skeletron_plot.txt";
  Result r = run({"slope-check", "--f", kWorkedF, "--punctures", kWorkedD, "--emit-plot", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string header, edge;
  std::getline(in, header);
  std::getline(in, edge);
  EXPECT_EQ(edge, "v0-v1\t2\t1/1\t2/1");
  std::filesystem::remove(path);
}

TEST(Cli, StabilizeCircleIsInputError) {
  Result r = run({"stabilize", "--graph", R"({"vertices":[{"id":"o","w":0}],"edges":[{"u":"o","v":"o","len":"5/1"}],"rays":[]})"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("genus 1 with no marked points"), std::string::npos) << r.err;
}

TEST(Cli, StabilizeReport) {
  Result r = run({"stabilize", "--graph",
                  R"({"vertices":[{"id":"p","w":0},{"id":"q","w":0},{"id":"z","w":0}],
                      "edges":[{"u":"p","v":"q","len":"1/1"},{"u":"p","v":"q","len":"2/1"},
                               {"u":"p","v":"q","len":"3/1"},{"u":"q","v":"z","len":"5/1"}],"rays":[]})"});
  ASSERT_EQ(r.code, 0) << r.err;
  json report = json::parse(r.out);
  EXPECT_EQ(report.at("steps").size(), 1u);
  EXPECT_EQ(report.at("output").at("vertices").size(), 2u);
}

TEST(Cli, MalformedJsonReportsPosition) {
  Result r = run({"eval", "--f", R"({"lead_val": "0/1", "factors": [)", "--point", "{}"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("at byte"), std::string::npos) << r.err;
}

TEST(Cli, UnknownFlagAndMissingSubcommand) {
  EXPECT_EQ(run({"tate", "--val-j", "1", "--bogus", "2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, EvalAndSkeleton) {
  Result e = run({"eval", "--f", kWorkedF, "--point", R"({"type":2,"center":"0","s":"1/1"})"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(json::parse(e.out).at("val"), "2/1");
  Result s = run({"skeleton", "--punctures", kWorkedD});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(json::parse(s.out).at("graph").at("edges").size(), 1u);
}

TEST(Cli, EmittedJsonReparses) {
  Result s = run({"skeleton", "--punctures", kWorkedD});
  json tree = json::parse(s.out);
  MetricGraph g = json_io::graph_from_json(tree.at("graph"));
  EXPECT_EQ(json_io::to_json(g), tree.at("graph"));
  for (const auto& [id, p] : tree.at("placement").items()) EXPECT_EQ(json_io::to_json(json_io::point_from_json(p)), p);
}

TEST(Cli, NewtonReportsUnit) {
  Result r = run({"newton", "--f", R"({"terms":[{"n":2,"v":"1/1"}]})", "--interval", "0,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j.at("unit").at("d"), 2);
  EXPECT_EQ(j.at("image").at("hi"), "5/1");
  Result tie = run({"newton", "--f", R"({"terms":[{"n":0,"v":"0/1"},{"n":1,"v":"0/1"}]})", "--interval", "0,2"});
  EXPECT_TRUE(json::parse(tie.out).at("unit").is_null());
}

TEST(Cli, VerificationFailureExitsOne) {
  auto dir = std::filesystem::temp_directory_path() / "skeletron_bad_fixtures";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.json") << R"({"f":{"lead_val":"0/1","factors":[{"root":"0","mult":1}]},
    "punctures":[{"type":1,"value":"0"},{"type":1,"value":"1"},{"type":1,"value":"inf"}],
    "claimed_orders":{"1":1},"expect":"pass"})";
  setenv("SKELETRON_FIXTURES", dir.c_str(), 1);
  Result r = run({"selftest"});
  unsetenv("SKELETRON_FIXTURES");
  std::filesystem::remove_all(dir);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[FAIL] fixture directory"), std::string::npos) << r.out;
}
