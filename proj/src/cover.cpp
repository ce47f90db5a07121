#include "asdim/cover.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace asdim {

namespace {

std::string set_label(size_t i) {
  std::ostringstream os;
  os << "set " << i;
  return os.str();
}

}  // namespace

VerificationReport verify_cover(const Cover& cover,
                                const DistanceOracle& oracle) {
  VerificationReport rep;
  const int n = oracle.vertex_count();

  if (cover.cert.claimed_coverage < 1 ||
      cover.cert.claimed_coverage > static_cast<int>(cover.sets.size())) {
    rep.failures.push_back("claimed coverage outside [1, set count]");
  }

  std::vector<int> hits(n, 0);
  for (const VertexSet& s : cover.sets) {
    for (int v : s) {
      if (v < 0 || v >= n) {
        rep.failures.push_back("set vertex out of range");
        rep.pass = false;
        return rep;
      }
      ++hits[v];
    }
  }
  rep.observed_min_coverage =
      cover.target.empty() ? 0 : std::numeric_limits<int>::max();
  for (int v : cover.target)
    rep.observed_min_coverage = std::min(rep.observed_min_coverage, hits[v]);
  if (!cover.target.empty() &&
      rep.observed_min_coverage < cover.cert.claimed_coverage) {
    std::ostringstream os;
    os << "coverage " << rep.observed_min_coverage << " below claimed "
       << cover.cert.claimed_coverage;
    rep.failures.push_back(os.str());
  }

  rep.per_set_max_component_diameter.reserve(cover.sets.size());
  for (size_t i = 0; i < cover.sets.size(); ++i) {
    double worst = 0.0;
    for (const VertexSet& comp :
         r_components(oracle, cover.sets[i], cover.cert.scale_r)) {
      double d = weak_diameter(oracle, comp);
      worst = std::max(worst, d);
    }
    rep.per_set_max_component_diameter.push_back(worst);
    rep.max_component_diameter = std::max(rep.max_component_diameter, worst);
    if (!dist_leq(worst, cover.cert.claimed_bound)) {
      std::ostringstream os;
      os << set_label(i) << ": component diameter " << worst
         << " exceeds claimed bound " << cover.cert.claimed_bound;
      rep.failures.push_back(os.str());
    }
  }

  if (cover.cert.claimed_multiplicity) {
    int mult = r_multiplicity(cover, oracle, cover.cert.scale_r);
    rep.observed_max_multiplicity = mult;
    if (mult > *cover.cert.claimed_multiplicity) {
      std::ostringstream os;
      os << "multiplicity " << mult << " exceeds claimed "
         << *cover.cert.claimed_multiplicity;
      rep.failures.push_back(os.str());
    }
  }

  rep.pass = rep.failures.empty();
  return rep;
}

int r_multiplicity(const Cover& cover, const DistanceOracle& oracle,
                   double r) {
  const int n = oracle.vertex_count();
  std::vector<std::vector<char>> in_set(cover.sets.size(),
                                        std::vector<char>(n, 0));
  for (size_t i = 0; i < cover.sets.size(); ++i)
    for (int v : cover.sets[i]) in_set[i][v] = 1;

  int worst = 0;
  for (int v = 0; v < n; ++v) {
    const std::vector<double>& d = oracle.row(v);
    VertexSet ball;
    for (int u = 0; u < n; ++u)
      if (dist_leq(d[u], r)) ball.push_back(u);
    int met = 0;
    for (size_t i = 0; i < cover.sets.size(); ++i) {
      for (int u : ball) {
        if (in_set[i][u]) {
          ++met;
          break;
        }
      }
    }
    worst = std::max(worst, met);
  }
  return worst;
}

Cover cover_to_partition(const Cover& cover) {
  Cover out;
  out.cert = cover.cert;
  out.cert.claimed_coverage = 1;
  out.target = cover.target;
  out.sets.assign(cover.sets.size(), {});
  std::vector<char> taken;
  int max_v = -1;
  for (int v : cover.target) max_v = std::max(max_v, v);
  for (const VertexSet& s : cover.sets)
    for (int v : s) max_v = std::max(max_v, v);
  taken.assign(max_v + 1, 0);
  for (size_t i = 0; i < cover.sets.size(); ++i) {
    for (int v : cover.sets[i]) {
      if (!taken[v]) {
        taken[v] = 1;
        out.sets[i].push_back(v);
      }
    }
  }
  for (int v : cover.target)
    if (!taken[v]) throw std::invalid_argument("target vertex uncovered");
  return out;
}

ColoringResult weak_diameter_coloring(const Cover& cover,
                                      const WeightedGraph& g,
                                      const DistanceOracle& oracle) {
  Cover part = cover_to_partition(cover);
  ColoringResult res;
  res.color.assign(g.vertex_count(), -1);
  for (size_t i = 0; i < part.sets.size(); ++i) {
    if (!part.sets[i].empty()) ++res.colors_used;
    for (int v : part.sets[i]) res.color[v] = static_cast<int>(i);
  }

  // Monochromatic components via BFS restricted to one color at a time.
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (res.color[s] == -1 || seen[s]) continue;
    VertexSet comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const auto& [v, w] : g.neighbors(u)) {
        if (!seen[v] && res.color[v] == res.color[s]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    vs_normalize(comp);
    res.max_monochromatic_weak_diameter =
        std::max(res.max_monochromatic_weak_diameter,
                 weak_diameter(oracle, comp));
  }
  return res;
}

}  // namespace asdim
