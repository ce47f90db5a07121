#include "asdim/pathwidth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "asdim/components.hpp"

namespace asdim {

namespace {

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

int pd_width(const PathDecomposition& pd) {
  int w = 0;
  for (const auto& bag : pd.bags) w = std::max<int>(w, (int)bag.size());
  return w - 1;
}

void validate_pd(const WeightedGraph& g, const PathDecomposition& pd) {
  const int n = g.vertex_count();
  if (pd.bags.empty()) throw std::invalid_argument("path decomposition has no bags");
  std::vector<int> first(n, -1), last(n, -1);
  for (int i = 0; i < (int)pd.bags.size(); ++i) {
    for (int v : pd.bags[i]) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("bag " + std::to_string(i) +
                                    " names vertex " + std::to_string(v) +
                                    " outside the graph");
      if (first[v] < 0) first[v] = i;
      last[v] = i;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (first[v] < 0)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " appears in no bag");
  }
  // Contiguity: v must be present in every bag between first and last.
  for (int i = 0; i < (int)pd.bags.size(); ++i) {
    for (int v = 0; v < n; ++v) {
      if (first[v] <= i && i <= last[v] && !vs_contains(pd.bags[i], v))
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " missing from bag " + std::to_string(i) +
                                    " inside its interval");
    }
  }
  for (const auto& e : g.edges()) {
    bool covered = false;
    for (const auto& bag : pd.bags) {
      if (vs_contains(bag, e.u) && vs_contains(bag, e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " inside no bag");
  }
}

PathDecomposition normalize_pd(const PathDecomposition& pd) {
  PathDecomposition out;
  out.bags.reserve(pd.bags.size());
  for (const auto& bag : pd.bags) {
    VertexSet b = bag;
    vs_normalize(b);
    out.bags.push_back(std::move(b));
  }
  bool changed = true;
  while (changed && out.bags.size() > 1) {
    changed = false;
    for (int i = 0; i < (int)out.bags.size(); ++i) {
      bool drop = false;
      if (i > 0 && is_subset(out.bags[i], out.bags[i - 1])) drop = true;
      if (i + 1 < (int)out.bags.size() && is_subset(out.bags[i], out.bags[i + 1]))
        drop = true;
      if (drop) {
        out.bags.erase(out.bags.begin() + i);
        changed = true;
        break;
      }
    }
  }
  return out;
}

IntervalRep interval_rep(const PathDecomposition& pd, int n) {
  IntervalRep rep;
  rep.ell = (int)pd.bags.size();
  rep.first.assign(n, -1);
  rep.last.assign(n, -1);
  for (int i = 0; i < rep.ell; ++i) {
    for (int v : pd.bags[i]) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("bag vertex out of range");
      if (rep.first[v] < 0) rep.first[v] = i;
      rep.last[v] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    if (rep.first[v] < 0)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " appears in no bag");
  return rep;
}

bool interval_strictly_contains(const IntervalRep& rep, int u, int v) {
  const bool contains =
      rep.first[u] <= rep.first[v] && rep.last[v] <= rep.last[u];
  const bool equal =
      rep.first[u] == rep.first[v] && rep.last[u] == rep.last[v];
  return contains && !equal;
}

LevelStructure peel_levels(const IntervalRep& rep) {
  const int n = (int)rep.first.size();
  LevelStructure ls;
  ls.level.assign(n, 0);
  ls.levels.push_back({});  // index 0 unused
  ls.starts.push_back({});
  std::vector<int> remaining;
  for (int v = 0; v < n; ++v) remaining.push_back(v);
  while (!remaining.empty()) {
    VertexSet maximal;
    for (int v : remaining) {
      bool dominated = false;
      for (int u : remaining) {
        if (u != v && interval_strictly_contains(rep, u, v)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) maximal.push_back(v);
    }
    if (maximal.empty())
      throw std::logic_error("peeling found no maximal interval");
    ls.p += 1;
    for (int v : maximal) ls.level[v] = ls.p;
    ls.levels.push_back(maximal);
    std::set<int> st;
    for (int v : maximal) st.insert(rep.first[v]);
    ls.starts.emplace_back(st.begin(), st.end());
    std::vector<int> next;
    for (int v : remaining)
      if (!vs_contains(maximal, v)) next.push_back(v);
    remaining.swap(next);
  }
  if (ls.p == 0) {
    ls.p = 1;
    ls.levels.push_back({});
    ls.starts.push_back({});
  }
  return ls;
}

long long pw_mu(const LevelStructure& ls, int j, int lo, int hi) {
  const auto& s = ls.starts.at(j);
  auto l = std::lower_bound(s.begin(), s.end(), lo);
  auto r = std::upper_bound(s.begin(), s.end(), hi);
  return r - l;
}

PwConstants pw_constants(int width, int p, double r) {
  if (p < 1) throw std::invalid_argument("need at least one level");
  if (r <= 0) throw std::invalid_argument("scale must be positive");
  PwConstants c;
  c.k_eff = std::max(width, 1);
  c.p = p;
  c.r_j.assign(p + 1, 0.0);
  c.R_j.assign(p + 1, 0.0);
  c.Q_j.assign(p + 1, 0.0);
  const double k = (double)c.k_eff;
  c.r_j[p] = 100.0 * r;
  c.R_j[p] = 3.0 * (k + 1.0) * k * c.r_j[p] * c.r_j[p];
  for (int j = p - 1; j >= 1; --j) {
    c.r_j[j] = 10.0 * c.R_j[j + 1];
    c.R_j[j] = 3.0 * (k + 1.0) * k * c.r_j[j] * c.r_j[j];
  }
  for (int j = 1; j <= p; ++j) {
    c.Q_j[j] = 2.0 * k * c.r_j[j];
    if (!std::isfinite(c.R_j[j]))
      throw std::invalid_argument("scale ladder overflows doubles");
  }
  return c;
}

std::vector<PwSection> make_sections(const IntervalRep& rep,
                                     const LevelStructure& ls, int j,
                                     double section_weight) {
  if (section_weight <= 0)
    throw std::invalid_argument("section weight must be positive");
  const auto& starts = ls.starts.at(j);
  std::vector<PwSection> sections;
  PwSection cur;
  cur.lo = 0;
  double weight = 0.0;
  for (int i = 0; i < rep.ell; ++i) {
    if (std::binary_search(starts.begin(), starts.end(), i)) weight += 1.0;
    if (weight >= section_weight - 0.5) {
      cur.hi = i + 1;
      sections.push_back(cur);
      cur = PwSection{};
      cur.lo = i + 1;
      weight = 0.0;
    }
  }
  if (cur.lo < rep.ell) {
    cur.hi = rep.ell;
    sections.push_back(cur);
  }
  if (sections.empty()) {
    cur.lo = 0;
    cur.hi = rep.ell;
    sections.push_back(cur);
  }
  for (auto& sec : sections) {
    for (int v : ls.levels.at(j))
      if (rep.first[v] >= sec.lo && rep.first[v] < sec.hi)
        sec.verts.push_back(v);
    vs_normalize(sec.verts);
  }
  return sections;
}

namespace {

// Min over pairs of d(a, b), with early exit once <= thresh.
bool sets_within(const DistanceOracle& oracle, const VertexSet& a,
                 const VertexSet& b, double thresh) {
  for (int u : a) {
    const auto& row = oracle.row(u);
    for (int v : b)
      if (dist_leq(row[v], thresh)) return true;
  }
  return false;
}

double set_weak_diameter(const DistanceOracle& oracle, const VertexSet& s) {
  if (s.empty()) return 0.0;
  return weak_diameter(oracle, s);
}

}  // namespace

Cover pw_cover(const WeightedGraph& g, const DistanceOracle& oracle,
               const PathDecomposition& pd_in, double r,
               PwInternals* internals) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  if (r <= 0) throw std::invalid_argument("scale must be positive");
  validate_pd(g, pd_in);
  PwInternals local;
  PwInternals& in = internals ? *internals : local;
  in = PwInternals{};
  in.pd = normalize_pd(pd_in);
  validate_pd(g, in.pd);
  in.rep = interval_rep(in.pd, g.vertex_count());

  // Normalization leaves every bag with a vertex starting there.
  {
    std::vector<char> has_start(in.rep.ell, 0);
    for (int v = 0; v < g.vertex_count(); ++v) has_start[in.rep.first[v]] = 1;
    for (int i = 0; i < in.rep.ell; ++i)
      if (!has_start[i])
        throw std::logic_error("normalized bag " + std::to_string(i) +
                               " has no starting vertex");
  }

  in.levels = peel_levels(in.rep);
  const int width = pd_width(in.pd);
  const int p = in.levels.p;
  if (p > width + 1 && width >= 1)
    throw std::logic_error("peeling produced more levels than width allows");
  in.consts = pw_constants(width, p, r);

  in.sections.assign(p + 1, {});
  in.initial.assign(p + 1, {});
  for (int j = 1; j <= p; ++j) {
    in.sections[j] = make_sections(in.rep, in.levels, j, in.consts.Q_j[j]);
    for (int s = 0; s < (int)in.sections[j].size(); ++s) {
      for (auto& comp :
           r_components(oracle, in.sections[j][s].verts, in.consts.r_j[j])) {
        PwCluster c;
        c.verts = std::move(comp);
        c.label = j;
        c.section = s;
        in.initial[j].push_back(std::move(c));
      }
    }
  }

  in.merged_by_round.assign(p + 1, {});
  for (const auto& c : in.initial[1]) {
    PwMerged m;
    m.verts = c.verts;
    m.age = 1;
    m.max_label = 1;
    in.merged_by_round[1].push_back(std::move(m));
  }
  for (int j = 2; j <= p; ++j) {
    const auto& prev = in.merged_by_round[j - 1];
    std::vector<std::vector<int>> adopted(prev.size());
    std::vector<int> lone;
    for (int ci = 0; ci < (int)in.initial[j].size(); ++ci) {
      const auto& c = in.initial[j][ci];
      int best = -1;
      for (int mi = 0; mi < (int)prev.size(); ++mi) {
        if (!sets_within(oracle, c.verts, prev[mi].verts, in.consts.r_j[j]))
          continue;
        if (best < 0 || prev[mi].age < prev[best].age ||
            (prev[mi].age == prev[best].age &&
             prev[mi].verts.front() < prev[best].verts.front()))
          best = mi;
      }
      if (best >= 0)
        adopted[best].push_back(ci);
      else
        lone.push_back(ci);
    }
    for (int mi = 0; mi < (int)prev.size(); ++mi) {
      PwMerged m = prev[mi];
      for (int ci : adopted[mi]) {
        m.verts = vs_union(m.verts, in.initial[j][ci].verts);
        m.max_label = j;
      }
      in.merged_by_round[j].push_back(std::move(m));
    }
    for (int ci : lone) {
      PwMerged m;
      m.verts = in.initial[j][ci].verts;
      m.age = j;
      m.max_label = j;
      in.merged_by_round[j].push_back(std::move(m));
    }
  }

  in.final_bound = (p + 1) * in.consts.R_j[1];
  if (in.final_bound > (in.consts.k_eff + 2) * in.consts.R_j[1] + kEps)
    throw std::logic_error("final bound exceeds (k+2) R_1");

  Cover cover;
  cover.target = all_vertices(g);
  for (const auto& m : in.merged_by_round[p])
    if (!m.verts.empty()) cover.sets.push_back(m.verts);
  std::sort(cover.sets.begin(), cover.sets.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.front() < b.front();
            });
  // The rounds partition level 1..p vertices; every vertex has a level.
  {
    size_t covered = 0;
    for (const auto& s : cover.sets) covered += s.size();
    if ((int)covered != g.vertex_count())
      throw std::logic_error("merged clusters do not partition the graph");
  }
  cover.cert.scale_r = r;
  cover.cert.claimed_bound = in.final_bound;
  cover.cert.claimed_coverage = 1;
  cover.cert.claimed_multiplicity = 2;
  cover.cert.scheme_name = "pathwidth";
  cover.cert.parameters["width"] = (double)width;
  cover.cert.parameters["k_eff"] = (double)in.consts.k_eff;
  cover.cert.parameters["p"] = (double)p;
  cover.cert.parameters["ell"] = (double)in.rep.ell;
  cover.cert.parameters["r_1"] = in.consts.r_j[1];
  cover.cert.parameters["R_1"] = in.consts.R_j[1];
  cover.cert.parameters["r_p"] = in.consts.r_j[p];
  cover.cert.parameters["R_p"] = in.consts.R_j[p];
  cover.cert.parameters["Q_1"] = in.consts.Q_j[1];
  cover.cert.parameters["Q_p"] = in.consts.Q_j[p];
  return cover;
}

namespace {

// Distances inside the subgraph induced on levels >= j, as a lazily built
// oracle plus the vertex mapping. The subgraph lives on the heap so the
// oracle's reference into it survives moves of the holder.
struct LevelTail {
  std::unique_ptr<InducedSubgraph> sub;
  std::unique_ptr<DistanceOracle> oracle;
  std::vector<int> to_local;  // -1 when absent
};

LevelTail build_tail(const WeightedGraph& g, const LevelStructure& ls,
                     int j) {
  VertexSet verts;
  for (int i = j; i <= ls.p; ++i)
    verts = vs_union(verts, ls.levels[i]);
  LevelTail t;
  t.sub = std::make_unique<InducedSubgraph>(induced_subgraph(g, verts));
  t.oracle = std::make_unique<DistanceOracle>(t.sub->graph);
  t.to_local.assign(g.vertex_count(), -1);
  for (int i = 0; i < (int)t.sub->to_orig.size(); ++i)
    t.to_local[t.sub->to_orig[i]] = i;
  return t;
}

}  // namespace

std::vector<std::string> pw_check_invariants(const WeightedGraph& g,
                                             const DistanceOracle& oracle,
                                             const PwInternals& in,
                                             double r) {
  std::vector<std::string> failures;
  const int n = g.vertex_count();
  const int p = in.consts.p;
  const double kk = (double)in.consts.k_eff;

  std::vector<char> has_start(in.rep.ell, 0);
  for (int v = 0; v < n; ++v)
    if (in.rep.first[v] >= 0) has_start[in.rep.first[v]] = 1;
  for (int i = 0; i < in.rep.ell; ++i)
    if (!has_start[i])
      failures.push_back("bag " + std::to_string(i) + " has no start");

  // Window bound: per section window, r-components of level-j vertices whose
  // interval meets the window have weak diameter <= (mu+1)(k+1)r.
  for (int j = 1; j <= p; ++j) {
    for (const auto& sec : in.sections[j]) {
      if (sec.lo >= sec.hi) continue;
      const long long mu = pw_mu(in.levels, j, sec.lo, sec.hi - 1);
      VertexSet present;
      for (int v : in.levels.levels[j])
        if (in.rep.first[v] <= sec.hi - 1 && in.rep.last[v] >= sec.lo)
          present.push_back(v);
      vs_normalize(present);
      const double bound = (double)(mu + 1) * (kk + 1.0) * r;
      for (const auto& comp : r_components(oracle, present, r)) {
        const double d = set_weak_diameter(oracle, comp);
        if (d > bound + kEps)
          failures.push_back("window bound broken at level " +
                             std::to_string(j) + ": diameter " + fmt(d) +
                             " > " + fmt(bound));
      }
    }
  }

  for (int j = 1; j <= p; ++j) {
    LevelTail tail = build_tail(g, in.levels, j);
    const double rj = in.consts.r_j[j];

    // Non-consecutive sections are > r_j apart in the level tail.
    const auto& secs = in.sections[j];
    for (int a = 0; a < (int)secs.size(); ++a) {
      for (int b = a + 2; b < (int)secs.size(); ++b) {
        if (secs[a].verts.empty() || secs[b].verts.empty()) continue;
        double best = kInf;
        for (int u : secs[a].verts) {
          const auto& row = tail.oracle->row(tail.to_local[u]);
          for (int v : secs[b].verts)
            best = std::min(best, row[tail.to_local[v]]);
        }
        if (best <= rj + kEps)
          failures.push_back("sections " + std::to_string(a) + "," +
                             std::to_string(b) + " at level " +
                             std::to_string(j) + " only " + fmt(best) +
                             " apart, need > " + fmt(rj));
      }
    }

    // Initial clusters are R_j-bounded.
    for (const auto& c : in.initial[j]) {
      const double d = set_weak_diameter(oracle, c.verts);
      if (d > in.consts.R_j[j] + kEps)
        failures.push_back("initial cluster at level " + std::to_string(j) +
                           " has diameter " + fmt(d) + " > " +
                           fmt(in.consts.R_j[j]));
    }

    // Balls of radius r_j/2: at most one initial j-cluster per section (full
    // graph), at most two in the level tail and then from consecutive
    // sections, and at most two j-merged clusters (full graph).
    for (int v = 0; v < n; ++v) {
      const auto& row = oracle.row(v);
      std::map<int, int> per_section;
      for (int ci = 0; ci < (int)in.initial[j].size(); ++ci) {
        const auto& c = in.initial[j][ci];
        bool hit = false;
        for (int u : c.verts)
          if (dist_leq(row[u], rj / 2.0)) {
            hit = true;
            break;
          }
        if (hit) per_section[c.section] += 1;
      }
      for (const auto& [sec, cnt] : per_section)
        if (cnt > 1)
          failures.push_back("ball at " + std::to_string(v) + " meets " +
                             std::to_string(cnt) +
                             " initial clusters of one section, level " +
                             std::to_string(j));

      int merged_hits = 0;
      for (const auto& m : in.merged_by_round[j]) {
        for (int u : m.verts)
          if (dist_leq(row[u], rj / 2.0)) {
            merged_hits += 1;
            break;
          }
      }
      if (merged_hits > 2)
        failures.push_back("ball at " + std::to_string(v) + " meets " +
                           std::to_string(merged_hits) +
                           " merged clusters after round " +
                           std::to_string(j));
    }
    for (int lv = 0; lv < tail.sub->graph.vertex_count(); ++lv) {
      const auto& row = tail.oracle->row(lv);
      std::vector<int> hit_sections;
      int hits = 0;
      for (const auto& c : in.initial[j]) {
        bool hit = false;
        for (int u : c.verts) {
          const int ul = tail.to_local[u];
          if (ul >= 0 && dist_leq(row[ul], rj / 2.0)) {
            hit = true;
            break;
          }
        }
        if (hit) {
          hits += 1;
          hit_sections.push_back(c.section);
        }
      }
      if (hits > 2)
        failures.push_back("tail ball at level " + std::to_string(j) +
                           " meets " + std::to_string(hits) +
                           " initial clusters");
      if (hits == 2 &&
          std::abs(hit_sections[0] - hit_sections[1]) > 1)
        failures.push_back("tail ball at level " + std::to_string(j) +
                           " meets non-consecutive sections");
    }

    // Label-range diameter: merged cluster with labels [j1, j2] stays within
    // (1 + j2) R_{j1}.
    for (const auto& m : in.merged_by_round[j]) {
      const double bound = (1.0 + m.max_label) * in.consts.R_j[m.age];
      const double d = set_weak_diameter(oracle, m.verts);
      if (d > bound + kEps)
        failures.push_back("merged cluster after round " + std::to_string(j) +
                           " has diameter " + fmt(d) + " > " + fmt(bound));
    }
  }
  return failures;
}

}  // namespace asdim
