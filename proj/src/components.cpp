#include "asdim/components.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace asdim {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<VertexSet> collect(Dsu& dsu, const VertexSet& s) {
  std::vector<VertexSet> out;
  std::vector<int> rep_to_idx(s.size(), -1);
  for (size_t i = 0; i < s.size(); ++i) {
    int r = dsu.find(static_cast<int>(i));
    if (rep_to_idx[r] == -1) {
      rep_to_idx[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[rep_to_idx[r]].push_back(s[i]);
  }
  // s sorted => each component sorted, components ordered by smallest member.
  return out;
}

}  // namespace

std::vector<VertexSet> r_components(const DistanceOracle& oracle,
                                    const VertexSet& s, double r) {
  Dsu dsu(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    const std::vector<double>& d = oracle.row(s[i]);
    for (size_t j = i + 1; j < s.size(); ++j)
      if (dist_leq(d[s[j]], r)) dsu.merge(static_cast<int>(i), static_cast<int>(j));
  }
  return collect(dsu, s);
}

std::vector<VertexSet> rs_components(const DistanceOracle& oracle,
                                     const RealProjection& f,
                                     const VertexSet& s, double r, double sp) {
  Dsu dsu(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    const std::vector<double>& d = oracle.row(s[i]);
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (dist_leq(d[s[j]], r) &&
          dist_leq(std::abs(f.values[s[i]] - f.values[s[j]]), sp))
        dsu.merge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return collect(dsu, s);
}

double weak_diameter(const DistanceOracle& oracle, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("weak diameter of empty set");
  double best = 0.0;
  for (size_t i = 0; i < s.size(); ++i) {
    const std::vector<double>& d = oracle.row(s[i]);
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (d[s[j]] == kInf) return kInf;
      best = std::max(best, d[s[j]]);
    }
  }
  return best;
}

}  // namespace asdim
