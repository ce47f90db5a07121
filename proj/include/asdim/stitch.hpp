#pragma once

#include <functional>

#include "asdim/cover.hpp"
#include "asdim/graph.hpp"
#include "asdim/line_cover.hpp"
#include "asdim/oracle.hpp"
#include "asdim/projection.hpp"

namespace asdim {

// One half-open slab of the projection handed to a cover provider.
struct SlabRequest {
  double lo = 0.0;
  double hi = 0.0;
  double rho = 0.0;   // chain scale the provider must bound against
  double span = 0.0;  // hi - lo
  int num_sets = 2;
  int min_coverage = 1;
  int level = 1;  // 1 = even intervals, 2 = odd intervals
};

// Provider contract: exactly num_sets sets, all inside f^-1([lo,hi)), their
// union covering it with multiplicity >= min_coverage per vertex, and every
// (rho, span)-component of every set having weak diameter (in the stitched
// graph's metric) at most reported_bound.
struct SlabCover {
  std::vector<VertexSet> sets;
  double reported_bound = 0.0;
};

using SlabProvider = std::function<SlabCover(const SlabRequest&)>;

struct StitchInternals {
  double s1 = 0, big_s1 = 0, s2 = 0;
  double r1 = 0, big_r1 = 0, r2 = 0, big_r2 = 0;
  double final_bound = 0;
  int level1_slabs = 0, level2_slabs = 0;
};

// Two-level assembly along a 1-Lipschitz projection: alternate length-s2
// intervals are covered by the provider at scale r1 = r (phase 1) and at
// scale r2 = R1 + 2*r1 + r (phase 2), where R_i is the largest bound the
// provider reported at level i. Phase-1 sets are thinned by a K-class line
// cover at grain s1 = r before the union, which caps their f-spread at
// (K-1)*s1; the interval gaps keep same-phase slabs independent. The union's
// r-components are (R2 + 2*r2)-bounded and every vertex is covered c times.
Cover stitch(const WeightedGraph& g, const DistanceOracle& oracle,
             const RealProjection& f, int num_sets, int coverage, double r,
             const SlabProvider& provider,
             StitchInternals* internals = nullptr);

// A piece handed to an intrinsic cover routine: the subgraph induced on the
// slab extended by rho on both sides, with its own metric.
struct IntrinsicPiece {
  const WeightedGraph& graph;
  const std::vector<int>& to_orig;
  DistanceOracle& oracle;
  const SlabRequest& request;
  double span_ext = 0.0;  // request.span + 2*rho
};

// Sets in the piece's local vertex ids.
using IntrinsicCoverFn = std::function<SlabCover(const IntrinsicPiece&)>;

// Runs `inner` on the extended slab's induced subgraph and restricts the
// result to the requested slab. Chains at scale rho between slab vertices
// stay inside the extension (shortest paths move f by at most rho), so
// intrinsic bounds dominate the extrinsic weak diameters.
SlabCover intrinsic_adapter(const WeightedGraph& g, const RealProjection& f,
                            const SlabRequest& req,
                            const IntrinsicCoverFn& inner);

}  // namespace asdim
