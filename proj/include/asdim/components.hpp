#pragma once

#include <vector>

#include "asdim/graph.hpp"
#include "asdim/oracle.hpp"
#include "asdim/projection.hpp"

namespace asdim {

// Maximal subsets of s chained by steps of graph distance <= r. Output
// components are sorted and ordered by smallest member.
std::vector<VertexSet> r_components(const DistanceOracle& oracle,
                                    const VertexSet& s, double r);

// Steps must satisfy both d(u,v) <= r and |f(u)-f(v)| <= sp. With sp >= r the
// projection constraint is vacuous (f is 1-Lipschitz), so (r,r)-components
// equal r-components.
std::vector<VertexSet> rs_components(const DistanceOracle& oracle,
                                     const RealProjection& f,
                                     const VertexSet& s, double r, double sp);

// Max pairwise distance within s; 0 for singletons, kInf when s straddles
// connected components. Empty s is an error.
double weak_diameter(const DistanceOracle& oracle, const VertexSet& s);

}  // namespace asdim
