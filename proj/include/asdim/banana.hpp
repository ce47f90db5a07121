#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asdim/graph.hpp"
#include "asdim/oracle.hpp"

namespace asdim {

// Two connected sets >= q apart joined by p geodesic connectors whose
// interiors are pairwise >= q apart. Connector paths exclude A and B; each
// endpoint has an edge into A resp. B, so a single shared attachment vertex
// in A never voids the separation check.
struct BananaWitness {
  VertexSet a;
  VertexSet b;
  std::vector<std::vector<int>> paths;  // connector interiors, path order
  double q = 0.0;
};

bool check_banana_witness(const WeightedGraph& g, const DistanceOracle& oracle,
                          const BananaWitness& w, std::string* why = nullptr);

// Exhaustive search over connected candidate sets of size <= 3 and shortest
// connector paths. A sanity oracle for small graphs, not a decision
// procedure; graphs above size_cap are rejected.
std::optional<BananaWitness> detect_fat_banana(const WeightedGraph& g,
                                               const DistanceOracle& oracle,
                                               double q, int p,
                                               int size_cap = 12);

}  // namespace asdim
