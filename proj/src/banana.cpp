#include "asdim/banana.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace asdim {

namespace {

double set_distance(const DistanceOracle& oracle, const VertexSet& a,
                    const VertexSet& b) {
  double best = kInf;
  for (int u : a) {
    const std::vector<double>& d = oracle.row(u);
    for (int v : b) best = std::min(best, d[v]);
  }
  return best;
}

bool has_edge_into(const WeightedGraph& g, int x, const VertexSet& s) {
  for (const auto& [v, w] : g.neighbors(x))
    if (vs_contains(s, v)) return true;
  return false;
}

bool is_geodesic_path(const DistanceOracle& oracle,
                      const std::vector<int>& path, const WeightedGraph& g) {
  double len = 0.0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    double step = kInf;
    for (const auto& [v, w] : g.neighbors(path[i]))
      if (v == path[i + 1]) step = std::min(step, w);
    if (step == kInf) return false;
    len += step;
  }
  return dist_leq(len, oracle.dist(path.front(), path.back()));
}

// Connected subsets of size <= 3, sorted members, deterministic order.
std::vector<VertexSet> small_connected_subsets(const WeightedGraph& g,
                                               const DistanceOracle& oracle) {
  std::vector<VertexSet> out;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a) out.push_back({a});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      VertexSet s{a, b};
      if (connected_components(induced_subgraph(g, s).graph).size() == 1)
        out.push_back(s);
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        VertexSet s{a, b, c};
        if (connected_components(induced_subgraph(g, s).graph).size() == 1)
          out.push_back(s);
      }
  return out;
}

// All shortest x..y paths avoiding `banned`, capped.
void enumerate_geodesics(const WeightedGraph& g, const DistanceOracle& oracle,
                         int x, int y, const std::vector<char>& banned,
                         size_t cap, std::vector<std::vector<int>>& out) {
  const std::vector<double>& dx = oracle.row(x);
  const std::vector<double>& dy = oracle.row(y);
  std::vector<int> path{x};
  auto walk = [&](auto&& self, int u) -> void {
    if (out.size() >= cap) return;
    if (u == y) {
      out.push_back(path);
      return;
    }
    for (const auto& [v, w] : g.neighbors(u)) {
      if (banned[v]) continue;
      if (std::abs(dx[u] + w + dy[v] - dx[y]) <= kEps &&
          std::abs(dy[v] + w - dy[u]) <= kEps) {
        path.push_back(v);
        self(self, v);
        path.pop_back();
      }
    }
  };
  walk(walk, x);
}

bool paths_separated(const DistanceOracle& oracle, const std::vector<int>& p1,
                     const std::vector<int>& p2, double q) {
  for (int u : p1) {
    const std::vector<double>& d = oracle.row(u);
    for (int v : p2)
      if (d[v] < q - kEps) return false;
  }
  return true;
}

}  // namespace

bool check_banana_witness(const WeightedGraph& g, const DistanceOracle& oracle,
                          const BananaWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.a.empty() || w.b.empty()) return fail("empty side");
  if (!vs_intersect(w.a, w.b).empty()) return fail("sides intersect");
  if (connected_components(induced_subgraph(g, w.a).graph).size() != 1)
    return fail("side A not connected");
  if (connected_components(induced_subgraph(g, w.b).graph).size() != 1)
    return fail("side B not connected");
  if (set_distance(oracle, w.a, w.b) < w.q - kEps)
    return fail("sides closer than q");
  for (const auto& path : w.paths) {
    if (path.empty()) return fail("empty connector");
    for (int v : path)
      if (vs_contains(w.a, v) || vs_contains(w.b, v))
        return fail("connector touches a side");
    if (!has_edge_into(g, path.front(), w.a))
      return fail("connector start not attached to A");
    if (!has_edge_into(g, path.back(), w.b))
      return fail("connector end not attached to B");
    if (!is_geodesic_path(oracle, path, g))
      return fail("connector not geodesic");
  }
  for (size_t i = 0; i < w.paths.size(); ++i)
    for (size_t j = i + 1; j < w.paths.size(); ++j)
      if (!paths_separated(oracle, w.paths[i], w.paths[j], w.q)) {
        std::ostringstream os;
        os << "connectors " << i << " and " << j << " closer than q";
        return fail(os.str());
      }
  return true;
}

std::optional<BananaWitness> detect_fat_banana(const WeightedGraph& g,
                                               const DistanceOracle& oracle,
                                               double q, int p, int size_cap) {
  if (p < 1) throw std::invalid_argument("banana order p must be >= 1");
  if (g.vertex_count() > size_cap)
    throw std::invalid_argument("graph exceeds banana search cap");
  const int n = g.vertex_count();
  std::vector<VertexSet> candidates = small_connected_subsets(g, oracle);

  for (const VertexSet& a : candidates) {
    for (const VertexSet& b : candidates) {
      if (!vs_intersect(a, b).empty()) continue;
      if (a > b) continue;  // unordered pair once
      if (set_distance(oracle, a, b) < q - kEps) continue;

      std::vector<char> banned(n, 0);
      for (int v : a) banned[v] = 1;
      for (int v : b) banned[v] = 1;

      std::vector<std::vector<int>> cands;
      for (int x = 0; x < n; ++x) {
        if (banned[x] || !has_edge_into(g, x, a)) continue;
        for (int y = 0; y < n; ++y) {
          if (banned[y] || !has_edge_into(g, y, b)) continue;
          if (oracle.dist(x, y) == kInf) continue;
          enumerate_geodesics(g, oracle, x, y, banned, 400, cands);
          if (cands.size() > 4000) break;
        }
      }

      // Greedy-complete search for p pairwise separated connectors.
      std::vector<size_t> chosen;
      auto extend = [&](auto&& self, size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == p) return true;
        for (size_t i = from; i < cands.size(); ++i) {
          bool ok = true;
          for (size_t c : chosen)
            if (!paths_separated(oracle, cands[c], cands[i], q)) {
              ok = false;
              break;
            }
          if (!ok) continue;
          chosen.push_back(i);
          if (self(self, i + 1)) return true;
          chosen.pop_back();
        }
        return false;
      };
      if (extend(extend, 0)) {
        BananaWitness w;
        w.a = a;
        w.b = b;
        w.q = q;
        for (size_t c : chosen) w.paths.push_back(cands[c]);
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace asdim
