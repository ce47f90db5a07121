#include "asdim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace asdim {

WeightedGraph::WeightedGraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  adj_.resize(n);
}

int WeightedGraph::add_vertex() {
  adj_.emplace_back();
  return n_++;
}

void WeightedGraph::add_edge(int u, int v, double w) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops not allowed");
  if (!(w > 0.0)) throw std::invalid_argument("edge weight must be positive");
  edges_.push_back({u, v, w});
  adj_[u].emplace_back(v, w);
  adj_[v].emplace_back(u, w);
}

const std::vector<std::pair<int, double>>& WeightedGraph::neighbors(
    int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  return adj_[v];
}

bool WeightedGraph::unit_weighted() const {
  for (const Edge& e : edges_)
    if (e.w != 1.0) return false;
  return true;
}

double WeightedGraph::max_weight() const {
  double m = 0.0;
  for (const Edge& e : edges_) m = std::max(m, e.w);
  return m;
}

void vs_normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool vs_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet all_vertices(const WeightedGraph& g) {
  VertexSet s(g.vertex_count());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_orig = s;
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < s.size(); ++i) {
    int v = s[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced set vertex out of range");
    if (local[v] != -1) throw std::invalid_argument("induced set not unique");
    local[v] = static_cast<int>(i);
  }
  out.graph = WeightedGraph(static_cast<int>(s.size()));
  for (const Edge& e : g.edges()) {
    if (local[e.u] != -1 && local[e.v] != -1)
      out.graph.add_edge(local[e.u], local[e.v], e.w);
  }
  return out;
}

std::vector<VertexSet> connected_components(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    stack.push_back(s);
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (const auto& [v, w] : g.neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    vs_normalize(out[id]);
  }
  return out;
}

WeightedGraph subdivide_edge(const WeightedGraph& g, int edge_index,
                             const std::vector<double>& fractions) {
  if (edge_index < 0 || edge_index >= g.edge_count())
    throw std::invalid_argument("edge index out of range");
  if (fractions.empty()) throw std::invalid_argument("fractions empty");
  double sum = 0.0;
  for (double f : fractions) {
    if (!(f > 0.0)) throw std::invalid_argument("fractions must be positive");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("fractions must sum to 1");

  WeightedGraph out(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == edge_index) continue;
    const Edge& e = g.edges()[i];
    out.add_edge(e.u, e.v, e.w);
  }
  const Edge& e = g.edges()[edge_index];
  if (fractions.size() == 1) {
    out.add_edge(e.u, e.v, e.w);
    return out;
  }
  int prev = e.u;
  for (size_t i = 0; i + 1 < fractions.size(); ++i) {
    int mid = out.add_vertex();
    out.add_edge(prev, mid, e.w * fractions[i]);
    prev = mid;
  }
  out.add_edge(prev, e.v, e.w * fractions.back());
  return out;
}

WeightedGraph subdivide_all(const WeightedGraph& g, int k) {
  if (k < 0) throw std::invalid_argument("subdivision count must be >= 0");
  if (!g.unit_weighted())
    throw std::invalid_argument("k-subdivision requires unit weights");
  WeightedGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    int prev = e.u;
    for (int i = 0; i < k; ++i) {
      int mid = out.add_vertex();
      out.add_edge(prev, mid, 1.0);
      prev = mid;
    }
    out.add_edge(prev, e.v, 1.0);
  }
  return out;
}

WeightedGraph split_heavy_edges(const WeightedGraph& g) {
  WeightedGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.w <= 1.0) {
      out.add_edge(e.u, e.v, e.w);
      continue;
    }
    int parts = static_cast<int>(std::ceil(e.w - 1e-12));
    double piece = e.w / parts;
    int prev = e.u;
    for (int i = 0; i + 1 < parts; ++i) {
      int mid = out.add_vertex();
      out.add_edge(prev, mid, piece);
      prev = mid;
    }
    out.add_edge(prev, e.v, piece);
  }
  return out;
}

}  // namespace asdim
