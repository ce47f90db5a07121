#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asdim/components.hpp"
#include "asdim/graph.hpp"
#include "asdim/oracle.hpp"

namespace asdim {

// A cover's claim, checked after the fact against exact distances: at scale
// scale_r, every r-component of every set has weak diameter <= claimed_bound,
// every target vertex lies in >= claimed_coverage sets, and (when present)
// every ball of radius scale_r meets <= claimed_multiplicity sets.
struct Certificate {
  double scale_r = 0.0;
  double claimed_bound = 0.0;
  int claimed_coverage = 1;
  std::optional<int> claimed_multiplicity;
  std::string scheme_name;
  std::map<std::string, double> parameters;
};

struct Cover {
  std::vector<VertexSet> sets;
  Certificate cert;
  VertexSet target;  // the vertices this cover promises to cover
};

struct VerificationReport {
  bool pass = false;
  int observed_min_coverage = 0;
  double max_component_diameter = 0.0;
  std::vector<double> per_set_max_component_diameter;
  std::optional<int> observed_max_multiplicity;
  std::vector<std::string> failures;
};

// Re-verifies every certificate claim against oracle distances.
VerificationReport verify_cover(const Cover& cover,
                                const DistanceOracle& oracle);

// Largest number of sets any closed r-ball around a graph vertex meets.
int r_multiplicity(const Cover& cover, const DistanceOracle& oracle, double r);

// Assign each covered vertex to its lowest-index containing set. The result
// is a partition of the target with the same certificate (coverage becomes
// 1; parts inherit the diameter claim because each part is a subset of the
// original set). Errors if some target vertex is uncovered.
Cover cover_to_partition(const Cover& cover);

struct ColoringResult {
  std::vector<int> color;  // -1 off target
  double max_monochromatic_weak_diameter = 0.0;
  int colors_used = 0;
};

// Colors target vertices by their partition index; monochromatic connected
// components (in the induced subgraph) have weak diameter <= the cover bound
// whenever scale_r >= max edge weight within the target.
ColoringResult weak_diameter_coloring(const Cover& cover,
                                      const WeightedGraph& g,
                                      const DistanceOracle& oracle);

}  // namespace asdim
