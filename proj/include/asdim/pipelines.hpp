#pragma once

#include "asdim/cover.hpp"
#include "asdim/graph.hpp"
#include "asdim/oracle.hpp"
#include "asdim/stitch.hpp"

namespace asdim {

// Closed-form guarantee when every slab provider satisfies the raw dilation
// bound a*rho + b*span with a,b >= 1: the stitched cover at scale r is
// 20a(6a + b(K+2))r bounded, K being the set count.
double dilation_closed_form(double a, double b, int num_sets, double r);

// 3-set cover at scale r for graphs with no K_{3,p} minor and weights in
// (0,1]. Per connected component: root at the lowest id, stitch along the
// rooted projection; slabs away from the root get modulus-3 annulus covers of
// the extended slab's components (fatness q = 6*span_ext + 2), slabs holding
// the root are 2*span_ext bounded outright. p >= 2.
Cover k3p_cover(const WeightedGraph& g, int p, double r,
                StitchInternals* internals = nullptr);

// Planar graphs have no K_{3,3} minor: k3p with p = 3.
Cover planar_cover(const WeightedGraph& g, double r);

// Euler genus g graphs have no K_{3,2g+3} minor: k3p with p = 2*genus+3.
Cover genus_cover(const WeightedGraph& g, int genus, double r);

// True when g admits a perfect elimination ordering (maximum cardinality
// search).
bool is_chordal(const WeightedGraph& g);

// Partition of an unweighted chordal graph into clusters of weak diameter
// <= 20r+12 <= 32r such that every r-ball meets at most 2 clusters: the
// two-set annulus cover at scale 2r (q=2, p=2) is made disjoint and split
// into 2r-components, one output set per cluster. Integer r >= 1.
Cover chordal_scheme(const WeightedGraph& g, double r);

}  // namespace asdim
