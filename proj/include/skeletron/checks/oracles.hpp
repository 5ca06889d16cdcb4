#pragma once

#include <random>
#include <vector>

#include "skeletron/berkovich.hpp"
#include "skeletron/metric_graph.hpp"

// Independent oracles and random fixture generators shared by the test
// suites and the `selftest` subcommand. Nothing here is used by the library
// proper.
namespace skeletron::checks {

/// val f(x) by expanding numerator and denominator as polynomials in
/// u = T - center(x), tropicalizing, and evaluating the Newton polygons at
/// the radius of x. Does not use the factored formula.
Rational recentering_oracle(const RationalFunction& f, const P1Point& x);

/// Nearest skeleton point by exhaustive search over a grid of tree points
/// with spacing `step` (edges, rays cut off past the depth of x).
P1Point brute_force_retract(const P1Point& x, const SkeletonTree& tree, const Rational& step);

/// Rational with denominator in {1,2,3,4} in [lo, hi].
Rational random_exponent(std::mt19937_64& rng, int lo, int hi);
/// A sum of one or two monomials with small integer coefficients.
Puiseux random_element(std::mt19937_64& rng);
/// Factored function with 1..max_roots distinct finite roots.
RationalFunction random_function(std::mt19937_64& rng, int max_roots, int max_mult);
/// Type-2 point hanging near one of the given anchors (or near 0).
P1Point random_type2(std::mt19937_64& rng, const std::vector<Puiseux>& anchors);
/// Connected weighted graph with loops, parallel edges and rays.
MetricGraph random_graph(std::mt19937_64& rng, int max_vertices, int max_extra_edges, int max_rays);

}  // namespace skeletron::checks
