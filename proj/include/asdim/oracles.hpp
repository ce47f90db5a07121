#pragma once

#include <vector>

#include "asdim/graph.hpp"

namespace asdim {

// Minimal achievable bound on a tiny graph: over every assignment of the
// vertices to num_sets classes, the smallest possible value of the largest
// r-component weak diameter. Exhaustive (restricted-growth enumeration);
// refuses graphs above 10 vertices.
double oracle_min_bound(const WeightedGraph& g, int num_sets, double r);

// result[r] = size of the largest closed ball of radius r, exact, one
// search per source. No caching, safe on graphs too large for the oracle's
// all-pairs warm-up.
std::vector<long long> oracle_growth(const WeightedGraph& g, int r_max);

// r-components computed by an independent path: Floyd-Warshall distances,
// then breadth-first search over the threshold graph on s. Same output
// contract as r_components (sorted sets ordered by smallest member).
std::vector<VertexSet> reference_r_components(const WeightedGraph& g,
                                              const VertexSet& s, double r);

}  // namespace asdim
