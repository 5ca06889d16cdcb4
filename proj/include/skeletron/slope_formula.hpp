#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "skeletron/berkovich.hpp"
#include "skeletron/metric_graph.hpp"

namespace skeletron {

/// Raised when F = val(f) fails to be integer-affine on the skeleton, which
/// happens only if f has a zero or pole off the punctures.
class SlopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// F = val(f) restricted to the skeleton. Every zero and pole of f must be
/// a puncture of `tree` (InputError otherwise). Edge slopes are oriented
/// parent -> child as stored in the graph; ray slopes are outgoing from the
/// base vertex toward the puncture.
PLFunction compute_F(const RationalFunction& f, const SkeletonTree& tree);

/// Number of tangent directions at `vertex` inside the skeleton: edge-ends
/// (loops twice) plus rays.
int direction_count(const SkeletonTree& tree, const std::string& vertex);

struct RaySlopeCheck {
  std::string mark;
  int slope;
  int expected_order;
  bool match;
};

struct RetractionSample {
  P1Point point;
  P1Point retraction;
  Rational value;
  Rational retracted_value;
  bool match;
};

struct SlopeReport {
  PLFunction F;
  std::map<std::string, int> harmonicity;  // outgoing slope sum per vertex
  std::vector<RaySlopeCheck> rays;
  std::vector<RetractionSample> samples;
  bool integer_slopes = true;
  int ray_slope_sum = 0;

  bool pass() const;
};

struct SlopeCheckOptions {
  std::size_t samples = 0;
  std::uint64_t seed = 0x5eed;
  /// Orders to compare ray slopes against instead of the true div(f),
  /// keyed by ray mark.
  std::map<std::string, int> claimed_orders;
};

SlopeReport verify_slope_formula(const RationalFunction& f, const SkeletonTree& tree,
                                 const SlopeCheckOptions& options = {});

/// Random type-2 points off the skeleton (their retraction differs from
/// them), generated by hanging small balls off skeleton points.
std::vector<P1Point> sample_off_skeleton(const SkeletonTree& tree, std::size_t count, std::mt19937_64& rng);

/// The function determined by harmonicity and the given ray slopes on a
/// tree skeleton, normalized by value(anchor) = anchor_value. Throws
/// InputError if the ray slopes do not sum to zero.
PLFunction integrate_ray_slopes(const SkeletonTree& tree, const std::map<std::string, int>& ray_slopes,
                                const std::string& anchor, const Rational& anchor_value);

}  // namespace skeletron
