#pragma once

#include <map>

#include "asdim/cover.hpp"
#include "asdim/graph.hpp"
#include "asdim/oracle.hpp"
#include "asdim/projection.hpp"

namespace asdim {

// Distance annuli around a root: core = {d(root,.) < k0*r}, annulus k =
// {k*r <= d(root,.) < (k+1)*r} for k >= k0. k0 is the smallest integer with
// k0*r >= r+q, rounded up so k0 ≡ m-1 (mod m).
struct AnnulusDecomposition {
  int root = 0;
  double r = 1.0;
  long long k0 = 1;
  VertexSet core;
  std::map<long long, VertexSet> annuli;  // key k >= k0, nonempty only
};

long long annulus_k0(double r, double q, int m);

AnnulusDecomposition build_annulus_decomposition(const WeightedGraph& g,
                                                 const DistanceOracle& oracle,
                                                 int root, double r, double q,
                                                 int m);

// Certified bound for the m-set annulus cover on graphs with no q-fat
// p-banana: each r-component of a set spans at most p blocks of m-1
// consecutive annuli plus possibly the core.
double annulus_bound(double r, double q, int p, int m);

// m sets, every vertex in exactly m-1 of them: set j drops annuli with
// k ≡ k0+j (mod m); sets 0..m-2 keep the core, set m-1 drops it. Requires a
// connected graph, r > 0, q >= 0, p >= 2, m >= 2.
Cover annulus_cover(const WeightedGraph& g, const DistanceOracle& oracle,
                    int root, double r, double q, int p, int m);

}  // namespace asdim
