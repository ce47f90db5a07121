#pragma once

#include <string>
#include <vector>

#include "asdim/graph.hpp"
#include "asdim/oracle.hpp"

namespace asdim {

// A real value per vertex, meant to be 1-Lipschitz w.r.t. the graph metric.
struct RealProjection {
  std::vector<double> values;

  double operator()(int v) const { return values[v]; }
};

// f(u) = d(root, u). Requires every vertex reachable from root.
RealProjection rooted_projection(const WeightedGraph& g,
                                 const DistanceOracle& oracle, int root);

// f(u) = coords[u][axis] / divisor.
RealProjection coordinate_projection(
    const std::vector<std::vector<double>>& coords, int axis, double divisor);

// Edge scan: |f(u)-f(v)| <= w(u,v) + kEps for every edge. Sufficient for
// 1-Lipschitz over the whole metric.
bool is_lipschitz(const WeightedGraph& g, const RealProjection& f,
                  std::string* violation = nullptr);

// Vertices with f in the half-open window [lo, hi), sorted.
VertexSet preimage(const RealProjection& f, double lo, double hi);

}  // namespace asdim
