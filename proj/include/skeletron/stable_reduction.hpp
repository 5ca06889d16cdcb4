#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skeletron/metric_graph.hpp"

namespace skeletron {

enum class PruneRule { kValence1, kValence2 };

std::string to_string(PruneRule rule);

struct PruneStep {
  PruneRule rule;
  std::string vertex;

  friend bool operator==(const PruneStep&, const PruneStep&) = default;
};

struct StabilizationReport {
  MetricGraph input;
  MetricGraph output;
  std::vector<PruneStep> steps;
  int chi;
};

/// Raised by stabilize when χ = 0: a minimal skeleton exists but its
/// vertex set is not unique.
class NonUniqueMinimalSkeleton : public InputError {
 public:
  using InputError::InputError;
};

/// Every removal allowed on `g`, ordered by vertex id, valence-1 removals
/// before valence-2 merges. A genus-0 vertex x qualifies when
///  - it has valence 1 through a non-loop edge (removing it and the edge),
///  - or it has valence 2 through two non-loop segments that are not both
///    rays (merging them; an edge merged with a ray extends the ray).
std::vector<PruneStep> prune_candidates(const MetricGraph& g);

/// Applies one candidate. Throws InputError when the step is not allowed.
MetricGraph apply_prune(const MetricGraph& g, const PruneStep& step);

/// The first candidate applied, or nothing at a fixed point.
std::optional<std::pair<MetricGraph, PruneStep>> prune_step(const MetricGraph& g);

/// Prunes to the fixed point. Requires euler_char(g) < 0; χ = 0 raises
/// NonUniqueMinimalSkeleton, χ > 0 raises InputError.
StabilizationReport stabilize(const MetricGraph& g);

/// Vertices of valence >= 3 or positive weight.
std::set<std::string> minimal_vertex_characterization(const MetricGraph& g);

/// No genus-0 vertex of valence < 3.
bool is_stable(const MetricGraph& g);

/// Skeleton of an elliptic curve from val(j): a circle of length -val(j)
/// for multiplicative reduction (val(j) < 0), else the single weight-1
/// vertex of good reduction.
MetricGraph tate_skeleton(const Rational& val_j);

struct Tropicalization {
  MetricGraph graph;
  /// 2 - 2g - n < 0: the graph is the stable representative.
  bool stable;
  /// 2 - 2g - n == 0: returned unmodified, minimal skeleton not unique.
  bool boundary_case;
};

/// Packages (Γ, w) for a curve of genus g with n marked points. Throws
/// InputError when 2 - 2g - n > 0 or the graph's genus or ray count
/// disagrees with (g, n).
Tropicalization abstract_tropicalization(int genus, int markings, const MetricGraph& graph);

}  // namespace skeletron
