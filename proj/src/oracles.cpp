#include "asdim/oracles.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "asdim/oracle.hpp"

namespace asdim {

namespace {

std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0.0;
  for (const auto& e : g.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

double coloring_worst_diameter(const std::vector<std::vector<double>>& d,
                               const std::vector<int>& color, int num_sets,
                               double r) {
  const int n = (int)color.size();
  double worst = 0.0;
  for (int c = 0; c < num_sets; ++c) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (color[v] == c) members.push_back(v);
    if (members.empty()) continue;
    // Union components chained by steps <= r, then take each component's
    // weak diameter.
    const int m = (int)members.size();
    std::vector<int> comp(m);
    for (int i = 0; i < m; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (dist_leq(d[members[i]][members[j]], r))
          comp[find(i)] = find(j);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (find(i) == find(j))
          worst = std::max(worst, d[members[i]][members[j]]);
  }
  return worst;
}

void enumerate_colorings(std::vector<int>& color, int v, int used,
                         int num_sets,
                         const std::vector<std::vector<double>>& d, double r,
                         double& best) {
  const int n = (int)color.size();
  if (v == n) {
    best = std::min(best, coloring_worst_diameter(d, color, num_sets, r));
    return;
  }
  // Restricted growth: class labels appear in first-use order, which
  // enumerates each set partition once.
  const int limit = std::min(used + 1, num_sets);
  for (int c = 0; c < limit; ++c) {
    color[v] = c;
    enumerate_colorings(color, v + 1, std::max(used, c + 1), num_sets, d, r,
                        best);
  }
}

}  // namespace

double oracle_min_bound(const WeightedGraph& g, int num_sets, double r) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty graph");
  if (n > 10)
    throw std::invalid_argument(
        "refusing exhaustive search above 10 vertices");
  if (num_sets < 1) throw std::invalid_argument("need at least one set");
  if (r <= 0) throw std::invalid_argument("scale must be positive");
  const auto d = floyd_warshall(g);
  double best = kInf;
  std::vector<int> color(n, 0);
  enumerate_colorings(color, 0, 0, num_sets, d, r, best);
  return best;
}

std::vector<long long> oracle_growth(const WeightedGraph& g, int r_max) {
  if (r_max < 0) throw std::invalid_argument("radius must be >= 0");
  const int n = g.vertex_count();
  std::vector<long long> profile(r_max + 1, 0);
  if (n == 0) return profile;
  const bool unit = g.unit_weighted();
  std::vector<double> dist(n);
  std::vector<int> idist(n);
  for (int src = 0; src < n; ++src) {
    if (unit) {
      std::fill(idist.begin(), idist.end(), -1);
      std::queue<int> q;
      idist[src] = 0;
      q.push(src);
      std::vector<long long> hist(r_max + 2, 0);
      hist[0] = 1;
      while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (idist[u] > r_max) continue;
        for (const auto& [v, w] : g.neighbors(u)) {
          (void)w;
          if (idist[v] < 0) {
            idist[v] = idist[u] + 1;
            if (idist[v] <= r_max) hist[idist[v]] += 1;
            q.push(v);
          }
        }
      }
      long long acc = 0;
      for (int r = 0; r <= r_max; ++r) {
        acc += hist[r];
        profile[r] = std::max(profile[r], acc);
      }
    } else {
      std::fill(dist.begin(), dist.end(), kInf);
      dist[src] = 0.0;
      using Item = std::pair<double, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
      pq.push({0.0, src});
      while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > dist[u] + kEps) continue;
        for (const auto& [v, w] : g.neighbors(u)) {
          if (dist[u] + w < dist[v]) {
            dist[v] = dist[u] + w;
            pq.push({dist[v], v});
          }
        }
      }
      std::vector<double> finite;
      finite.reserve(n);
      for (double x : dist)
        if (x < kInf) finite.push_back(x);
      std::sort(finite.begin(), finite.end());
      for (int r = 0; r <= r_max; ++r) {
        const auto it = std::upper_bound(finite.begin(), finite.end(),
                                         (double)r + kEps);
        profile[r] =
            std::max(profile[r], (long long)(it - finite.begin()));
      }
    }
  }
  return profile;
}

std::vector<VertexSet> reference_r_components(const WeightedGraph& g,
                                              const VertexSet& s, double r) {
  const auto d = floyd_warshall(g);
  VertexSet verts = s;
  vs_normalize(verts);
  const int m = (int)verts.size();
  std::vector<int> comp(m, -1);
  int next_comp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::queue<int> q;
    comp[i] = next_comp;
    q.push(i);
    while (!q.empty()) {
      const int a = q.front();
      q.pop();
      for (int b = 0; b < m; ++b) {
        if (comp[b] < 0 && dist_leq(d[verts[a]][verts[b]], r)) {
          comp[b] = next_comp;
          q.push(b);
        }
      }
    }
    next_comp++;
  }
  std::vector<VertexSet> out(next_comp);
  for (int i = 0; i < m; ++i) out[comp[i]].push_back(verts[i]);
  for (auto& c : out) vs_normalize(c);
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.front() < b.front();
            });
  return out;
}

}  // namespace asdim
