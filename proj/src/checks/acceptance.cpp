#include "skeletron/checks/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "skeletron/berkovich.hpp"
#include "skeletron/checks/oracles.hpp"
#include "skeletron/json_io.hpp"
#include "skeletron/slope_formula.hpp"
#include "skeletron/stable_reduction.hpp"
#include "skeletron/tropical.hpp"

namespace skeletron::checks {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  // Records the first failure only; later ones would be noise.
  void fail(const std::string& why) {
    if (passed) detail << why;
    passed = false;
  }
};

std::vector<P1Point> punctures_of(const RationalFunction& f) {
  std::vector<P1Point> d = f.support();
  if (std::find(d.begin(), d.end(), P1Point::infinity()) == d.end()) d.push_back(P1Point::infinity());
  return d;
}

std::vector<Puiseux> roots_of(const RationalFunction& f) {
  std::vector<Puiseux> out;
  for (const auto& factor : f.factors()) out.push_back(*factor.root);
  return out;
}

// 1: the five metric consequences of the Slope Formula on random functions.
void slope_formula_suite(std::uint64_t seed, Outcome& out) {
  std::mt19937_64 rng(seed);
  constexpr int kFunctions = 200;
  constexpr std::size_t kSamples = 20;
  for (int i = 0; i < kFunctions && out.passed; ++i) {
    RationalFunction f = random_function(rng, 6, 3);
    SkeletonTree tree = build_skeleton_tree(punctures_of(f));
    SlopeCheckOptions options;
    options.samples = kSamples;
    options.seed = rng();
    SlopeReport report = verify_slope_formula(f, tree, options);
    if (report.samples.size() != kSamples) {
      out.fail("function " + std::to_string(i) + ": only " + std::to_string(report.samples.size()) +
               " off-skeleton samples generated");
    } else if (!report.pass()) {
      out.fail("function " + std::to_string(i) + " failed: " + json_io::to_json(f).dump());
    }
  }
  if (out.passed) out.detail << kFunctions << " functions, " << kSamples << " retraction samples each";
}

// 2: factored evaluation against the recentering Newton-polygon oracle.
void oracle_equivalence(std::uint64_t seed, Outcome& out) {
  std::mt19937_64 rng(seed);
  constexpr int kPairs = 1000;
  for (int i = 0; i < kPairs && out.passed; ++i) {
    RationalFunction f = random_function(rng, 6, 3);
    P1Point x = random_type2(rng, roots_of(f));
    Rational direct = eval_val(f, x);
    Rational oracle = recentering_oracle(f, x);
    if (direct != oracle) {
      out.fail("pair " + std::to_string(i) + " at " + x.to_string() + ": eval_val " + format_rational(direct) +
               " vs oracle " + format_rational(oracle));
    }
  }
  if (out.passed) out.detail << kPairs << " (function, point) pairs agree exactly";
}

// 3: slope changes on the line ζ(0, s) count poles minus zeros, and the
// final slope is the order at 0.
void slope_change_counting(std::uint64_t seed, Outcome& out) {
  std::mt19937_64 rng(seed);
  constexpr int kFunctions = 100;
  int breakpoints_checked = 0;
  for (int i = 0; i < kFunctions && out.passed; ++i) {
    RationalFunction f = random_function(rng, 6, 3);
    LaurentPolynomial num(Puiseux(1)), den(Puiseux(1));
    std::vector<ZeroPole> zeros_poles;
    Rational last = 0;
    for (const auto& factor : f.factors()) {
      auto power = LaurentPolynomial::linear(-*factor.root).pow(static_cast<unsigned>(std::abs(factor.mult)));
      (factor.mult > 0 ? num : den) = (factor.mult > 0 ? num : den) * power;
      ValQ v = factor.root->valuation();
      if (v.is_finite()) {
        zeros_poles.push_back({v.value(), factor.mult});
        last = std::max(last, v.value());
      }
    }
    TropicalLaurent tnum = num.tropicalize(), tden = den.tropicalize();
    auto bps = quotient_breakpoints(tnum, tden, Interval::whole_line());
    std::set<Rational> seen;
    for (const auto& b : bps) {
      ++breakpoints_checked;
      seen.insert(b.s);
      int expected = slope_change_count(zeros_poles, b.s);
      if (b.slope_right - b.slope_left != expected) {
        out.fail("function " + std::to_string(i) + " at s = " + format_rational(b.s) + ": slope change " +
                 std::to_string(b.slope_right - b.slope_left) + ", expected " + std::to_string(expected));
      }
    }
    for (const auto& zp : zeros_poles) {
      if (!seen.contains(zp.valuation) && slope_change_count(zeros_poles, zp.valuation) != 0) {
        out.fail("function " + std::to_string(i) + ": missing breakpoint at " + format_rational(zp.valuation));
      }
    }
    Rational beyond = last + 1;
    int final_slope = right_slope(tnum, beyond) - right_slope(tden, beyond);
    int order = f.order_at(P1Point::k_point(Puiseux()));
    if (final_slope != order) {
      out.fail("function " + std::to_string(i) + ": slope " + std::to_string(final_slope) +
               " past the last breakpoint, order at 0 is " + std::to_string(order));
    }
  }
  if (out.passed) out.detail << kFunctions << " functions, " << breakpoints_checked << " breakpoints";
}

// 4: units α T^d (1 + g) on closed annuli.
void unit_decomposition_suite(std::uint64_t seed, Outcome& out) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(-4, 4), count(0, 4), offset(1, 8), coeff(1, 5);
  constexpr int kUnits = 100;
  for (int i = 0; i < kUnits && out.passed; ++i) {
    int d = 0;
    while (d == 0) d = degree(rng);
    Rational lo = random_exponent(rng, -2, 2);
    Rational hi = lo + (i % 10 == 0 ? Rational(0) : random_exponent(rng, 0, 3));
    Rational val_alpha = random_exponent(rng, -2, 2);
    LaurentPolynomial series = LaurentPolynomial::monomial(
        Puiseux::monomial(coeff(rng), val_alpha) + Puiseux::monomial(1, val_alpha + 1), d);
    int extra = count(rng);
    for (int k = 0; k < extra; ++k) {
      int n = degree(rng) + (k % 2 == 0 ? 3 : -3);
      if (n == d) continue;
      // strictly above the dominant term at both ends, hence on all of [lo, hi]
      Rational floor = std::max(val_alpha + (d - n) * lo, val_alpha + (d - n) * hi);
      Rational v = floor + make_rational(offset(rng), 4);
      series += LaurentPolynomial::monomial(Puiseux::monomial(coeff(rng), v), n);
    }
    Interval annulus = Interval::closed(lo, hi);
    auto unit = unit_decomposition(series.tropicalize(), annulus);
    if (!unit || unit->degree != d || unit->val_alpha != val_alpha) {
      out.fail("unit " + std::to_string(i) + ": decomposition does not match construction");
      break;
    }
    Interval image = map_skeleton(unit->degree, unit->val_alpha, annulus);
    if (image.length() != ValQ(Rational(std::abs(d) * annulus.length().value()))) {
      out.fail("unit " + std::to_string(i) + ": image modulus is not |d| times the modulus");
    }
  }
  if (out.passed) out.detail << kUnits << " units";
}

// Every maximal sequence of prune steps from g.
void all_outcomes(const MetricGraph& g, std::vector<MetricGraph>& results) {
  auto candidates = prune_candidates(g);
  if (candidates.empty()) {
    results.push_back(g);
    return;
  }
  for (const auto& step : candidates) all_outcomes(apply_prune(g, step), results);
}

std::set<std::string> marks_of(const MetricGraph& g) {
  std::set<std::string> out;
  for (const auto& r : g.rays()) out.insert(r.mark);
  return out;
}

// Marked weighted graphs on up to 4 vertices with up to 5 edges (loops and
// parallel edges allowed), total weight <= 1 and up to 2 rays, one labeling
// per vertex-signature order.
template <typename Visit>
void for_each_family_graph(Visit&& visit) {
  const std::vector<Rational> lengths = {Rational(1), Rational(2), make_rational(1, 2), Rational(3),
                                         make_rational(5, 3)};
  const std::vector<std::string> names = {"a", "b", "c", "d"};
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<int> chosen;
    std::function<void(std::size_t)> edges_from = [&](std::size_t start) {
      if (static_cast<int>(chosen.size()) >= n - 1) {
        for (int weighted = -1; weighted < n; ++weighted) {
          for (int rays = 0; rays <= 2; ++rays) {
            int combos = rays == 0 ? 1 : (rays == 1 ? n : n * n);
            for (int c = 0; c < combos; ++c) {
              std::vector<Vertex> vertices;
              for (int v = 0; v < n; ++v) vertices.push_back({names[v], v == weighted ? 1 : 0});
              std::vector<Edge> edges;
              for (std::size_t k = 0; k < chosen.size(); ++k) {
                auto [i, j] = pairs[chosen[k]];
                edges.push_back({names[i], names[j], lengths[k]});
              }
              std::vector<Ray> ray_list;
              if (rays >= 1) ray_list.push_back({names[c % n], "p"});
              if (rays == 2) ray_list.push_back({names[c / n], "q"});
              MetricGraph g(vertices, edges, ray_list);
              if (!g.is_connected() || euler_char(g) >= 0) continue;
              // symmetry break: (weight, valence) nonincreasing along the labels
              bool canonical = true;
              for (int v = 1; v < n && canonical; ++v) {
                auto prev = std::make_pair(g.weight(names[v - 1]), g.valence(names[v - 1]));
                auto cur = std::make_pair(g.weight(names[v]), g.valence(names[v]));
                canonical = !(prev < cur);
              }
              if (canonical) visit(g);
            }
          }
        }
      }
      if (chosen.size() == 5) return;
      for (std::size_t p = start; p < pairs.size(); ++p) {
        chosen.push_back(static_cast<int>(p));
        edges_from(p);
        chosen.pop_back();
      }
    };
    edges_from(0);
  }
}

// 5: every prune order ends in the same stable graph.
void stable_reduction_confluence(std::uint64_t, Outcome& out) {
  int graphs = 0;
  std::size_t orders = 0;
  for_each_family_graph([&](const MetricGraph& g) {
    if (!out.passed) return;
    ++graphs;
    StabilizationReport report = stabilize(g);
    std::vector<MetricGraph> results;
    all_outcomes(g, results);
    orders += results.size();
    const std::string where = json_io::to_json(g).dump();
    if (report.steps.size() > g.vertices().size()) out.fail("too many prune steps for " + where);
    if (!is_stable(report.output)) out.fail("unstable output for " + where);
    for (const auto& r : results) {
      if (!is_isomorphic(r, report.output)) {
        out.fail("prune orders disagree for " + where);
        return;
      }
      if (total_genus(r) != total_genus(g) || euler_char(r) != euler_char(g) || marks_of(r) != marks_of(g)) {
        out.fail("genus, euler characteristic or markings not conserved for " + where);
        return;
      }
    }
  });
  if (out.passed) out.detail << graphs << " graphs, " << orders << " maximal prune sequences";
}

// 6: refinement leaves genus data and original distances unchanged.
void refinement_invariance(std::uint64_t seed, Outcome& out) {
  std::mt19937_64 rng(seed);
  constexpr int kGraphs = 100;
  constexpr int kRefinements = 10;
  std::uniform_int_distribution<int> fraction(1, 7);
  for (int i = 0; i < kGraphs && out.passed; ++i) {
    MetricGraph g = random_graph(rng, 6, 4, 3);
    MetricGraph refined = g;
    for (int k = 0; k < kRefinements; ++k) {
      std::uniform_int_distribution<std::size_t> edge(0, refined.edges().size() - 1);
      if (refined.edges().empty()) break;
      std::size_t e = edge(rng);
      refined = refine(refined, e, refined.edges()[e].length * make_rational(fraction(rng), 8));
    }
    if (betti1(refined) != betti1(g) || total_genus(refined) != total_genus(g) || euler_char(refined) != euler_char(g)) {
      out.fail("graph " + std::to_string(i) + ": genus data changed under refinement");
    }
    for (const auto& u : g.vertices()) {
      for (const auto& v : g.vertices()) {
        if (shortest_path(g, u.id, v.id) != shortest_path(refined, u.id, v.id)) {
          out.fail("graph " + std::to_string(i) + ": distance " + u.id + "-" + v.id + " changed under refinement");
        }
      }
    }
  }
  if (out.passed) out.detail << kGraphs << " graphs x " << kRefinements << " refinements";
}

// 7: nested skeleta and the distance decomposition through retractions.
void retraction_compatibility(std::uint64_t seed, Outcome& out) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nfinite(1, 5), nextra(1, 3);
  std::bernoulli_distribution with_infinity(0.6);
  constexpr int kPoints = 500;
  constexpr int kPairs = 500;
  constexpr int kBruteForce = 60;
  int points = 0, pairs = 0, brute = 0;
  while ((points < kPoints || pairs < kPairs) && out.passed) {
    std::vector<P1Point> d;
    std::vector<Puiseux> finite;
    int k = nfinite(rng);
    while (static_cast<int>(finite.size()) < k) {
      Puiseux a = random_element(rng);
      if (std::find(finite.begin(), finite.end(), a) != finite.end()) continue;
      finite.push_back(a);
      d.push_back(P1Point::k_point(a));
    }
    if (with_infinity(rng) || d.size() < 2) d.push_back(P1Point::infinity());
    std::vector<P1Point> extra;
    int ne = nextra(rng);
    for (int i = 0; i < ne; ++i) extra.push_back(random_type2(rng, finite));
    SkeletonTree small = build_skeleton_tree(d);
    SkeletonTree large = build_skeleton_tree(d, extra);
    for (int i = 0; i < 25 && points < kPoints; ++i, ++points) {
      P1Point x = random_type2(rng, finite);
      P1Point direct = retract(x, small);
      if (retract(retract(x, large), small) != direct) out.fail("nested retraction mismatch at " + x.to_string());
      if (retract(direct, small) != direct) out.fail("retraction not idempotent at " + x.to_string());
      if (brute < kBruteForce) {
        ++brute;
        if (brute_force_retract(x, small, make_rational(1, 12)) != direct) {
          out.fail("grid minimizer disagrees with retraction at " + x.to_string());
        }
      }
    }
    for (int i = 0; i < 50 && pairs < kPairs; ++i) {
      P1Point x = random_type2(rng, finite);
      P1Point y = random_type2(rng, finite);
      P1Point tx = retract(x, small), ty = retract(y, small);
      if (tx == ty) continue;
      ++pairs;
      ValQ lhs = path_distance(x, y);
      ValQ rhs = path_distance(x, tx) + path_distance(tx, ty) + path_distance(ty, y);
      if (lhs != rhs) out.fail("distance decomposition fails for " + x.to_string() + ", " + y.to_string());
    }
  }
  if (out.passed) {
    out.detail << points << " nested retractions (" << brute << " against the grid minimizer), " << pairs
               << " decomposed pairs";
  }
}

// 8: the Tate circle has circumference -val(j).
void tate_relation(std::uint64_t seed, Outcome& out) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 40), den(1, 7);
  for (int i = 0; i < 20; ++i) {
    Rational val_j = -make_rational(num(rng), den(rng));
    MetricGraph g = tate_skeleton(val_j);
    bool ok = g.vertices().size() == 1 && g.edges().size() == 1 && g.edges()[0].is_loop() &&
              g.edges()[0].length == -val_j && total_genus(g) == 1 && euler_char(g) == 0;
    if (!ok) out.fail("val_j = " + format_rational(val_j) + ": not a circle of length -val_j");
  }
  for (const Rational& val_j : {Rational(0), Rational(3), make_rational(1, 2)}) {
    MetricGraph g = tate_skeleton(val_j);
    if (g.vertices().size() != 1 || g.vertices()[0].weight != 1 || !g.edges().empty()) {
      out.fail("val_j = " + format_rational(val_j) + ": good reduction should give one weight-1 vertex");
    }
  }
  if (out.passed) out.detail << "20 multiplicative and 3 good-reduction cases";
}

// 9: f = T (T - t) / (T - 1)^2 on P^1 minus {0, t, 1, inf}.
void worked_fixture(std::uint64_t, Outcome& out) {
  const Puiseux t = Puiseux::t();
  RationalFunction f(0, {{Puiseux(), 1}, {t, 1}, {Puiseux(1), -2}});
  std::vector<P1Point> d = {P1Point::k_point(Puiseux()), P1Point::k_point(t), P1Point::k_point(Puiseux(1)),
                            P1Point::infinity()};
  SkeletonTree tree = build_skeleton_tree(d);
  const P1Point gauss = P1Point::gauss();
  const P1Point inner = P1Point::type2(Puiseux(), 1);

  // Confirm the frozen constants with the oracle before trusting them.
  struct Expected {
    std::string mark;
    P1Point base;
    P1Point probe;
    Rational run;
    int slope;
  };
  const std::vector<Expected> rays = {
      {"0", inner, P1Point::type2(Puiseux(), 2), 1, 1},
      {"t", inner, P1Point::type2(t, 2), 1, 1},
      {"1", gauss, P1Point::type2(Puiseux(1), 1), 1, -2},
      {"inf", gauss, P1Point::type2(Puiseux(), -1), 1, 0},
  };
  if (recentering_oracle(f, gauss) != 0 || recentering_oracle(f, inner) != 2) {
    out.fail("oracle disagrees with frozen vertex values F(zeta(0,0)) = 0, F(zeta(0,1)) = 2");
    return;
  }
  for (const auto& r : rays) {
    Rational slope = (recentering_oracle(f, r.probe) - recentering_oracle(f, r.base)) / r.run;
    if (slope != r.slope) out.fail("oracle disagrees with frozen ray slope toward " + r.mark);
  }

  auto g_id = tree.vertex_at(gauss);
  auto i_id = tree.vertex_at(inner);
  if (!g_id || !i_id || tree.graph().vertices().size() != 2) {
    out.fail("skeleton should have exactly the vertices zeta(0,0) and zeta(0,1)");
    return;
  }
  PLFunction F = compute_F(f, tree);
  if (F.vertex_values.at(*g_id) != 0 || F.vertex_values.at(*i_id) != 2) out.fail("vertex values differ");
  if (F.outgoing_slope(tree.graph(), 0, *g_id) != 2) out.fail("edge slope from zeta(0,0) to zeta(0,1) is not 2");
  for (const auto& r : rays) {
    if (F.ray_slopes.at(r.mark) != r.slope) out.fail("ray slope toward " + r.mark + " differs");
  }
  SlopeReport report = verify_slope_formula(f, tree, {});
  if (!report.pass()) out.fail("slope formula report fails");
  if (out.passed) out.detail << "F = (0, 2), edge slope 2, ray slopes (+1, +1, -2, 0), confirmed by the oracle";
}

struct CriterionSpec {
  const char* title;
  double budget;
  void (*body)(std::uint64_t, Outcome&);
};

const CriterionSpec kCriteria[kCriterionCount] = {
    {"slope formula suite", 30, slope_formula_suite},
    {"eval_val vs recentering oracle", 10, oracle_equivalence},
    {"slope changes count zeros and poles", 5, slope_change_counting},
    {"unit decomposition and modulus scaling", 5, unit_decomposition_suite},
    {"stable reduction confluence", 60, stable_reduction_confluence},
    {"genus formula and refinement invariance", 10, refinement_invariance},
    {"retraction compatibility and distance decomposition", 10, retraction_compatibility},
    {"tate circle circumference", 0, tate_relation},
    {"worked fixture T(T-t)/(T-1)^2", 0, worked_fixture},
};

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ");
  if (r.id > 0) os << "criterion " << r.id << ": ";
  os << r.title << " - " << r.detail << " ("
     << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.budget_seconds > 0) os << " of " << r.budget_seconds << " s";
  os << ")";
  return os.str();
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  const CriterionSpec& spec = kCriteria[id - 1];
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  try {
    spec.body(seed + static_cast<std::uint64_t>(id), outcome);
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (spec.budget > 0 && seconds > spec.budget) outcome.fail("exceeded time budget");
  return {id, spec.title, outcome.passed, outcome.detail.str(), seconds, spec.budget};
}

CriterionResult run_fixture_directory(const std::filesystem::path& dir) {
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  int count = 0;
  try {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      std::ifstream in(file);
      auto j = nlohmann::json::parse(in);
      RationalFunction f = json_io::function_from_json(j.at("f"));
      std::vector<P1Point> d;
      for (const auto& p : j.at("punctures")) d.push_back(json_io::point_from_json(p));
      SlopeCheckOptions options;
      options.samples = j.value("samples", 5);
      if (j.contains("claimed_orders")) {
        for (const auto& [mark, order] : j.at("claimed_orders").items()) options.claimed_orders[mark] = order.get<int>();
      }
      bool expect_pass = j.value("expect", std::string("pass")) == "pass";
      bool passed = verify_slope_formula(f, build_skeleton_tree(d), options).pass();
      ++count;
      if (passed != expect_pass) outcome.fail(file.filename().string() + " gave the wrong verdict");
    }
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  if (outcome.passed) outcome.detail << count << " fixtures from " << dir.string();
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {0, "fixture directory", outcome.passed, outcome.detail.str(), seconds, 0};
}

bool run_acceptance(std::uint64_t seed, const std::optional<std::filesystem::path>& fixtures, std::ostream& out) {
  bool all = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    CriterionResult r = run_criterion(id, seed);
    out << format_line(r) << '\n' << std::flush;
    all &= r.passed;
  }
  if (fixtures) {
    CriterionResult r = run_fixture_directory(*fixtures);
    out << format_line(r) << '\n';
    all &= r.passed;
  }
  out << (all ? "all acceptance criteria passed" : "some acceptance criteria FAILED") << '\n';
  return all;
}

}  // namespace skeletron::checks
