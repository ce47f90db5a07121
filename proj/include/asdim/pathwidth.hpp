#pragma once

#include <string>
#include <vector>

#include "asdim/cover.hpp"
#include "asdim/graph.hpp"
#include "asdim/oracle.hpp"

namespace asdim {

// Ordered bags of a path decomposition. Width = max bag size - 1.
struct PathDecomposition {
  std::vector<VertexSet> bags;
};

int pd_width(const PathDecomposition& pd);

// Throws invalid_argument naming the first violation: vertex in no bag,
// vertex with non-contiguous bag indices, edge inside no bag, or bad id.
void validate_pd(const WeightedGraph& g, const PathDecomposition& pd);

// Repeatedly deletes any bag contained in an adjacent bag. The result
// decomposes the same graph and every bag index has a vertex starting there.
PathDecomposition normalize_pd(const PathDecomposition& pd);

// Per-vertex closed interval [first, last] of bag indices.
struct IntervalRep {
  int ell = 0;
  std::vector<int> first;
  std::vector<int> last;
};

IntervalRep interval_rep(const PathDecomposition& pd, int n);

// I_u strictly contains I_v: containment with at least one strict endpoint.
bool interval_strictly_contains(const IntervalRep& rep, int u, int v);

// Peeling by interval maximality: level 1 holds the vertices whose interval
// is strictly contained in no other, level j repeats on what remains. Within
// a level no interval strictly contains another.
struct LevelStructure {
  int p = 0;
  std::vector<int> level;                // per vertex, 1-based
  std::vector<VertexSet> levels;         // levels[j], index 0 unused
  std::vector<std::vector<int>> starts;  // starts[j] = sorted start indices S_j
};

LevelStructure peel_levels(const IntervalRep& rep);

// mu_j([lo, hi]) = number of start indices of level-j intervals in the
// closed window.
long long pw_mu(const LevelStructure& ls, int j, int lo, int hi);

// Scale ladder, top-down: r_p = 100r, R_j = 3(k+1)k r_j^2, r_j = 10 R_{j+1},
// section weight Q_j = 2k r_j. k here is max(width, 1) so the formulas stay
// positive on width-0 inputs.
struct PwConstants {
  long long k_eff = 1;
  int p = 1;
  std::vector<double> r_j;  // 1-based, size p+1
  std::vector<double> R_j;
  std::vector<double> Q_j;
};

PwConstants pw_constants(int width, int p, double r);

// Consecutive bag-index windows [lo, hi) whose mu_j weight is exactly
// section_weight, except the last which may be lighter. A section owns the
// level-j vertices whose interval starts inside it.
struct PwSection {
  int lo = 0;
  int hi = 0;
  VertexSet verts;
};

std::vector<PwSection> make_sections(const IntervalRep& rep,
                                     const LevelStructure& ls, int j,
                                     double section_weight);

// Initial cluster: one r_j-component of a section's vertices, distances in
// the full graph.
struct PwCluster {
  VertexSet verts;
  int label = 0;    // level j
  int section = 0;  // index within the level's section list
};

// Merged cluster after round j. Label range [j1, j2] covers the labels of
// the initial clusters inside; age = j1.
struct PwMerged {
  VertexSet verts;
  int age = 0;
  int max_label = 0;
};

struct PwInternals {
  PathDecomposition pd;  // normalized
  IntervalRep rep;
  LevelStructure levels;
  PwConstants consts;
  std::vector<std::vector<PwSection>> sections;        // [j], 1-based
  std::vector<std::vector<PwCluster>> initial;         // [j], 1-based
  std::vector<std::vector<PwMerged>> merged_by_round;  // [j], 1-based
  double final_bound = 0.0;
};

// Partition with r-multiplicity claim 2 and diameter claim (p+1) R_1. Each
// initial j-cluster joins the minimum-age (j-1)-merged cluster within
// distance r_j, ties by smallest vertex id; otherwise it stands alone.
Cover pw_cover(const WeightedGraph& g, const DistanceOracle& oracle,
               const PathDecomposition& pd, double r,
               PwInternals* internals = nullptr);

// Re-checks the structural guarantees the construction relies on, against
// exact distances. Returns one message per violation; empty means all hold.
//   - every bag index has a starting vertex
//   - window bound: r-components of level-j vertices met by a section's bags
//     have weak diameter <= (mu+1)(k+1)r
//   - non-consecutive j-sections are > r_j apart in the induced graph on
//     levels >= j
//   - initial j-clusters have weak diameter <= R_j
//   - balls of radius r_j/2 meet <= 1 initial j-cluster per section, <= 2
//     overall in the induced graph on levels >= j (consecutive sections when
//     two), and <= 2 j-merged clusters
//   - merged label ranges [j1, j2] have weak diameter <= (1 + j2) R_{j1}
std::vector<std::string> pw_check_invariants(const WeightedGraph& g,
                                             const DistanceOracle& oracle,
                                             const PwInternals& in, double r);

}  // namespace asdim
