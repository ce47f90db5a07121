#pragma once

#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#include "asdim/graph.hpp"

namespace asdim {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Comparison slack for thresholds on accumulated float distances. Boundary
// noise is resolved upward: d <= r means d <= r + kEps.
inline constexpr double kEps = 1e-9;

inline bool dist_leq(double d, double r) { return d <= r + kEps; }

// Half-open interval membership and indexing with the same upward slack:
// a value within kEps below a boundary counts as being past it.
inline bool in_half_open(double x, double lo, double hi) {
  return x + kEps >= lo && x + kEps < hi;
}
long long interval_index(double x, double width);

// Exact shortest-path distances, one Dijkstra row per source, computed
// lazily and cached. Rows are immutable once published; concurrent readers
// get identical values.
class DistanceOracle {
 public:
  explicit DistanceOracle(const WeightedGraph& g, int all_pairs_cap = 5000);

  const std::vector<double>& row(int source) const;
  double dist(int u, int v) const { return row(u).at(v); }
  int vertex_count() const;

  // Precompute every row now; refuses graphs larger than the cap.
  void warm_all_pairs();
  int all_pairs_cap() const { return cap_; }

 private:
  const WeightedGraph* g_;
  int cap_;
  mutable std::mutex mu_;
  mutable std::vector<std::shared_ptr<const std::vector<double>>> rows_;
};

}  // namespace asdim
