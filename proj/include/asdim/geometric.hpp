#pragma once

#include <string>
#include <vector>

#include "asdim/cover.hpp"
#include "asdim/graph.hpp"
#include "asdim/oracle.hpp"

namespace asdim {

// A drawing of the graph in R^d. Separation mode: distinct vertices at
// Euclidean distance >= 1, adjacent ones <= stretch apart. Unit-ball mode:
// adjacency holds exactly for pairs at distance <= 1 (boundary pairs within
// kEps of 1 are accepted either way).
struct Embedding {
  int d = 1;
  double stretch = 1.0;
  bool unit_ball = false;
  std::vector<std::vector<double>> points;  // per vertex, length d
};

// Exhaustive pairwise check of the mode invariants; one message per
// violation, empty means valid.
std::vector<std::string> validate_embedding(const WeightedGraph& g,
                                            const Embedding& emb);

// One recursion level of the geometric cover. free_i counts the coordinates
// not yet constrained to a box; kbox is the box side for the constrained
// ones. cov_target = (d+1) - free_i is the coverage the level must deliver,
// checked against the built cover (the coverage ledger).
struct GeoLevel {
  int free_i = 0;
  int cov_target = 0;
  double rho = 0.0;
  double kbox = 0.0;
  int piece_vertices = 0;
  bool base_case = false;
  double bound = 0.0;
  long long packing_limit = 0;  // base case, separation mode
  int observed_coverage = 0;
};

struct GeoTrace {
  std::vector<GeoLevel> levels;
};

// d+1 sets covering an embedded graph, built by stitching along one
// coordinate per level and boxing it; fully boxed pieces take the whole
// piece K times with a packing bound. Separation mode needs edge weights
// >= 1, unit-ball mode exactly 1.
Cover geometric_cover(const WeightedGraph& g, const Embedding& emb, double r,
                      GeoTrace* trace = nullptr);

// Unit-weight graph joining every pair of points at Euclidean distance <= 1.
WeightedGraph build_unit_ball_graph(const std::vector<std::vector<double>>& points);

// Builds the unit-ball graph of the points and covers it with d+1 sets.
Cover unit_ball_cover(const std::vector<std::vector<double>>& points, double r,
                      GeoTrace* trace = nullptr);

// Cover for a subgraph of the integer grid: separation mode with stretch 1.
// Coordinates must be integral.
Cover grid_subgraph_cover(const WeightedGraph& g,
                          const std::vector<std::vector<double>>& coords,
                          double r, GeoTrace* trace = nullptr);

}  // namespace asdim
