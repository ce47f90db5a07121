#pragma once

#include <cstdint>
#include <vector>

#include "asdim/geometric.hpp"
#include "asdim/graph.hpp"
#include "asdim/pathwidth.hpp"

namespace asdim {

// Deterministic splitmix64 stream; identical across platforms, unlike the
// standard distributions.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint32_t below(uint32_t n) { return (uint32_t)(next() % n); }

  double unit() { return (double)(next() >> 11) * 0x1.0p-53; }
};

struct GridInstance {
  WeightedGraph graph;
  std::vector<std::vector<double>> coords;
};

// Unit-weight grid, row-major vertex ids, integer coordinates.
GridInstance gen_grid(const std::vector<int>& dims);

// Grid with wrap-around edges on every axis of length >= 3.
WeightedGraph gen_torus_grid(const std::vector<int>& dims);

WeightedGraph gen_path(int n);
WeightedGraph gen_cycle(int n);
WeightedGraph gen_complete(int n);

// Random recursive tree: vertex i attaches to a uniform earlier vertex.
WeightedGraph gen_tree(uint64_t seed, int n);

// Random tree plus extra random edges; unit or seeded weights in (0, 1].
WeightedGraph random_connected_graph(uint64_t seed, int n, int extra_edges,
                                     bool unit_weights);

struct IntervalInstance {
  WeightedGraph graph;
  PathDecomposition pd;
};

// Random interval graph built by a start/end event walk keeping at most
// width+1 intervals alive, with its natural path decomposition (one bag per
// event time). Unit weights; clique number <= width+1.
IntervalInstance gen_interval_graph(uint64_t seed, int n, int width);

// Uniform points in [0, box]^d.
std::vector<std::vector<double>> gen_unit_ball_points(uint64_t seed, int n,
                                                      int d, double box);

struct SeparationInstance {
  WeightedGraph graph;
  Embedding emb;
};

// Rejection-sampled points pairwise >= 1 apart in [0, box]^d; the graph
// joins every pair at distance <= stretch (unit weights). Throws when the
// box is too crowded to place n points.
SeparationInstance gen_separation_instance(uint64_t seed, int n, int d,
                                           double stretch, double box);

struct StretchParams {
  int k = 0;  // subdivisions per original edge
  int p = 0;  // subdivisions per tree edge
};

struct StretchInfo {
  std::vector<int> root;                 // tree root per original vertex
  std::vector<std::vector<int>> leaves;  // attachment leaves in edge order
  std::vector<int> tree_size;            // subdivided tree sizes
};

// Replaces vertex v by a minimal-height balanced binary tree with deg(v)
// leaves (single vertex when deg <= 1), subdivides tree edges p times and
// original edges k times; leaf i of v serves v's i-th incident edge in
// neighbor-id order. Unit weights in, unit weights out.
WeightedGraph stretch(const WeightedGraph& g, const StretchParams& params,
                      StretchInfo* info = nullptr);

}  // namespace asdim
