#include "asdim/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace asdim {

GridInstance gen_grid(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("need at least one dimension");
  long long total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("grid dimensions must be >= 1");
    total *= d;
    if (total > 2'000'000) throw std::invalid_argument("grid too large");
  }
  const int n = (int)total;
  const int nd = (int)dims.size();
  GridInstance inst{WeightedGraph(n), {}};
  inst.coords.assign(n, std::vector<double>(nd, 0.0));
  std::vector<int> stride(nd, 1);
  for (int a = nd - 2; a >= 0; --a) stride[a] = stride[a + 1] * dims[a + 1];
  for (int v = 0; v < n; ++v) {
    int rest = v;
    for (int a = 0; a < nd; ++a) {
      const int c = rest / stride[a];
      rest %= stride[a];
      inst.coords[v][a] = (double)c;
      if (c + 1 < dims[a]) inst.graph.add_edge(v, v + stride[a], 1.0);
    }
  }
  return inst;
}

WeightedGraph gen_torus_grid(const std::vector<int>& dims) {
  GridInstance inst = gen_grid(dims);
  WeightedGraph g = inst.graph;
  const int nd = (int)dims.size();
  std::vector<int> stride(nd, 1);
  for (int a = nd - 2; a >= 0; --a) stride[a] = stride[a + 1] * dims[a + 1];
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int a = 0; a < nd; ++a) {
      const int c = (int)inst.coords[v][a];
      // Wrapping an axis of length 2 would duplicate the existing edge.
      if (dims[a] >= 3 && c == dims[a] - 1)
        g.add_edge(v, v - c * stride[a], 1.0);
    }
  }
  return g;
}

WeightedGraph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs >= 1 vertex");
  WeightedGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, 1.0);
  return g;
}

WeightedGraph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  WeightedGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n, 1.0);
  return g;
}

WeightedGraph gen_complete(int n) {
  if (n < 1) throw std::invalid_argument("need >= 1 vertex");
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, 1.0);
  return g;
}

WeightedGraph gen_tree(uint64_t seed, int n) {
  if (n < 1) throw std::invalid_argument("tree needs >= 1 vertex");
  Rng rng(seed);
  WeightedGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge((int)rng.below((uint32_t)v), v, 1.0);
  return g;
}

WeightedGraph random_connected_graph(uint64_t seed, int n, int extra_edges,
                                     bool unit_weights) {
  if (n < 1) throw std::invalid_argument("need >= 1 vertex");
  Rng rng(seed);
  WeightedGraph g(n);
  std::set<std::pair<int, int>> used;
  auto weight = [&]() {
    return unit_weights ? 1.0 : 0.05 + 0.95 * rng.unit();
  };
  for (int v = 1; v < n; ++v) {
    const int u = (int)rng.below((uint32_t)v);
    g.add_edge(u, v, weight());
    used.insert({std::min(u, v), std::max(u, v)});
  }
  int placed = 0, attempts = 0;
  const long long all_pairs = (long long)n * (n - 1) / 2;
  while (placed < extra_edges && (long long)used.size() < all_pairs &&
         attempts < 50 * extra_edges + 100) {
    attempts++;
    int u = (int)rng.below((uint32_t)n);
    int v = (int)rng.below((uint32_t)n);
    if (u == v) continue;
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    if (used.count(key)) continue;
    used.insert(key);
    g.add_edge(key.first, key.second, weight());
    placed++;
  }
  return g;
}

IntervalInstance gen_interval_graph(uint64_t seed, int n, int width) {
  if (n < 1) throw std::invalid_argument("need >= 1 vertex");
  if (width < 1) throw std::invalid_argument("width must be >= 1");
  Rng rng(seed);
  const int cap = width + 1;
  std::vector<int> s(n, -1), e(n, -1);
  std::vector<int> active;
  int started = 0, finished = 0, t = 0;
  while (finished < n) {
    const bool can_start = started < n && (int)active.size() < cap;
    const bool can_end = !active.empty();
    bool do_start;
    if (!can_start)
      do_start = false;
    else if (!can_end)
      do_start = true;
    else if ((int)active.size() == 1 && started < n)
      do_start = rng.below(100) < 80;  // keep instances mostly connected
    else
      do_start = rng.below(100) < 55;
    if (do_start) {
      const int v = started++;
      s[v] = t;
      active.push_back(v);
    } else {
      const int idx = (int)rng.below((uint32_t)active.size());
      const int v = active[idx];
      active.erase(active.begin() + idx);
      e[v] = t;
      finished++;
    }
    t++;
  }
  IntervalInstance inst{WeightedGraph(n), {}};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (s[u] <= e[v] && s[v] <= e[u]) inst.graph.add_edge(u, v, 1.0);
  inst.pd.bags.assign(t, {});
  for (int v = 0; v < n; ++v)
    for (int i = s[v]; i <= e[v]; ++i) inst.pd.bags[i].push_back(v);
  for (auto& bag : inst.pd.bags) vs_normalize(bag);
  // Event times with no live interval leave empty bags; drop them.
  inst.pd.bags.erase(std::remove_if(inst.pd.bags.begin(), inst.pd.bags.end(),
                                    [](const VertexSet& b) { return b.empty(); }),
                     inst.pd.bags.end());
  return inst;
}

std::vector<std::vector<double>> gen_unit_ball_points(uint64_t seed, int n,
                                                      int d, double box) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  if (box <= 0) throw std::invalid_argument("box must be positive");
  Rng rng(seed);
  std::vector<std::vector<double>> pts(n, std::vector<double>(d));
  for (auto& p : pts)
    for (double& x : p) x = box * rng.unit();
  return pts;
}

SeparationInstance gen_separation_instance(uint64_t seed, int n, int d,
                                           double stretch, double box) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  if (stretch < 1.0) throw std::invalid_argument("stretch must be >= 1");
  if (box <= 0) throw std::invalid_argument("box must be positive");
  Rng rng(seed);
  std::vector<std::vector<double>> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 20000 && !placed; ++attempt) {
      std::vector<double> cand(d);
      for (double& x : cand) x = box * rng.unit();
      bool ok = true;
      for (const auto& q : pts) {
        double s2 = 0.0;
        for (int a = 0; a < d; ++a) s2 += (cand[a] - q[a]) * (cand[a] - q[a]);
        if (s2 < 1.0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        pts.push_back(std::move(cand));
        placed = true;
      }
    }
    if (!placed)
      throw std::runtime_error("could not place " + std::to_string(n) +
                               " separated points in box " +
                               std::to_string(box));
  }
  SeparationInstance inst{WeightedGraph(n), {}};
  inst.emb.d = d;
  inst.emb.stretch = stretch;
  inst.emb.unit_ball = false;
  inst.emb.points = pts;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      double s2 = 0.0;
      for (int a = 0; a < d; ++a)
        s2 += (pts[u][a] - pts[v][a]) * (pts[u][a] - pts[v][a]);
      if (std::sqrt(s2) <= stretch + kEps) inst.graph.add_edge(u, v, 1.0);
    }
  }
  return inst;
}

namespace {

struct BalancedTree {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leaf_order;
};

int build_balanced(BalancedTree& t, int leaves) {
  const int id = t.nodes++;
  if (leaves <= 1) {
    t.leaf_order.push_back(id);
    return id;
  }
  const int left = build_balanced(t, (leaves + 1) / 2);
  const int right = build_balanced(t, leaves / 2);
  t.edges.emplace_back(id, left);
  t.edges.emplace_back(id, right);
  return id;
}

}  // namespace

WeightedGraph stretch(const WeightedGraph& g, const StretchParams& params,
                      StretchInfo* info) {
  if (params.k < 0 || params.p < 0)
    throw std::invalid_argument("stretch parameters must be >= 0");
  if (!g.unit_weighted())
    throw std::invalid_argument("stretch is defined for unit weights");
  const int n = g.vertex_count();
  WeightedGraph out(0);
  StretchInfo local;
  StretchInfo& inf = info ? *info : local;
  inf.root.assign(n, -1);
  inf.leaves.assign(n, {});
  inf.tree_size.assign(n, 0);

  for (int v = 0; v < n; ++v) {
    const int deg = (int)g.neighbors(v).size();
    BalancedTree t;
    if (deg == 0) {
      t.nodes = 1;  // isolated vertex keeps a bare tree with no leaves
    } else {
      build_balanced(t, deg);
    }
    std::vector<int> global(t.nodes);
    for (int i = 0; i < t.nodes; ++i) global[i] = out.add_vertex();
    for (const auto& [a, b] : t.edges) {
      int prev = global[a];
      for (int step = 0; step < params.p; ++step) {
        const int mid = out.add_vertex();
        out.add_edge(prev, mid, 1.0);
        prev = mid;
      }
      out.add_edge(prev, global[b], 1.0);
    }
    inf.root[v] = global[0];
    for (int leaf : t.leaf_order) inf.leaves[v].push_back(global[leaf]);
    inf.tree_size[v] = t.nodes + params.p * (int)t.edges.size();
  }

  // Position of each edge in its endpoints' neighbor-id-ordered edge lists.
  std::vector<std::vector<std::pair<int, int>>> incident(n);  // (nbr, edge idx)
  for (int ei = 0; ei < (int)g.edges().size(); ++ei) {
    const auto& e = g.edges()[ei];
    incident[e.u].push_back({e.v, ei});
    incident[e.v].push_back({e.u, ei});
  }
  for (auto& lst : incident) std::sort(lst.begin(), lst.end());
  std::vector<std::pair<int, int>> attach(g.edges().size(), {-1, -1});
  for (int v = 0; v < n; ++v) {
    for (int slot = 0; slot < (int)incident[v].size(); ++slot) {
      const int ei = incident[v][slot].second;
      if (attach[ei].first < 0)
        attach[ei].first = inf.leaves[v][slot];
      else
        attach[ei].second = inf.leaves[v][slot];
    }
  }
  for (int ei = 0; ei < (int)g.edges().size(); ++ei) {
    int prev = attach[ei].first;
    for (int step = 0; step < params.k; ++step) {
      const int mid = out.add_vertex();
      out.add_edge(prev, mid, 1.0);
      prev = mid;
    }
    out.add_edge(prev, attach[ei].second, 1.0);
  }
  return out;
}

}  // namespace asdim
