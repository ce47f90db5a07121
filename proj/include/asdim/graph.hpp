#pragma once

#include <utility>
#include <vector>

namespace asdim {

// Vertex ids are dense ints 0..n-1. Sets of vertices are kept sorted and
// duplicate-free; helpers below maintain that invariant.
using VertexSet = std::vector<int>;

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// Undirected multigraph with positive edge weights. No self-loops; parallel
// edges are kept as given (shortest paths only ever see the lightest one).
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);

  int add_vertex();
  void add_edge(int u, int v, double w = 1.0);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, double>>& neighbors(int v) const;

  bool unit_weighted() const;  // every weight exactly 1.0
  double max_weight() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
};

void vs_normalize(VertexSet& s);
bool vs_contains(const VertexSet& s, int v);
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const WeightedGraph& g);

struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<int> to_orig;  // local id -> original id, sorted ascending
};

// Induced subgraph on s (sorted). Local ids follow the order of s.
InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);

// Connected components ignoring weights, each sorted, ordered by smallest
// member.
std::vector<VertexSet> connected_components(const WeightedGraph& g);

// Replace edge e by a path through fresh vertices; fractions must be positive
// and sum to 1, each new edge gets fraction*w. New vertices take ids
// n, n+1, ... in path order. A single fraction {1} returns the graph
// unchanged.
WeightedGraph subdivide_edge(const WeightedGraph& g, int edge_index,
                             const std::vector<double>& fractions);

// k-subdivision with unit weights: every edge becomes a path of k+1 unit
// edges. Requires a unit-weighted input; distances between original vertices
// scale by exactly k+1. New vertices are appended edge by edge in input
// order.
WeightedGraph subdivide_all(const WeightedGraph& g, int k);

// Split every edge of weight > 1 into ceil(w) equal parts (each <= 1).
// Distances are preserved exactly; original vertex ids are unchanged.
WeightedGraph split_heavy_edges(const WeightedGraph& g);

}  // namespace asdim
