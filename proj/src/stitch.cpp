#include "asdim/stitch.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace asdim {

namespace {

void validate_slab_cover(const SlabCover& resp, const SlabRequest& req,
                         const RealProjection& f, const VertexSet& slab) {
  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << "slab [" << req.lo << "," << req.hi << ") level " << req.level
       << ": " << what;
    throw std::runtime_error(os.str());
  };
  if (static_cast<int>(resp.sets.size()) != req.num_sets)
    fail("provider returned wrong set count");
  if (resp.reported_bound < 0) fail("negative reported bound");
  std::map<int, int> hits;
  for (const VertexSet& s : resp.sets) {
    for (int v : s) {
      if (!in_half_open(f.values[v], req.lo, req.hi))
        fail("provider set leaks outside the slab");
      ++hits[v];
    }
  }
  for (int v : slab)
    if (hits[v] < req.min_coverage) fail("slab coverage below requirement");
}

}  // namespace

Cover stitch(const WeightedGraph& g, const DistanceOracle& oracle,
             const RealProjection& f, int num_sets, int coverage, double r,
             const SlabProvider& provider, StitchInternals* internals) {
  if (num_sets < 2) throw std::invalid_argument("need >= 2 sets");
  if (coverage < 1 || coverage >= num_sets)
    throw std::invalid_argument("coverage must be in [1, num_sets-1]");
  if (!(r > 0.0)) throw std::invalid_argument("scale must be positive");
  if (static_cast<int>(f.values.size()) != g.vertex_count())
    throw std::invalid_argument("projection size mismatch");

  const int K = num_sets;
  StitchInternals in;
  in.s1 = r;
  in.big_s1 = (K - 1) * in.s1;
  in.s2 = (K + 2) * r;
  in.r1 = r;

  std::map<long long, VertexSet> groups;
  for (int v = 0; v < g.vertex_count(); ++v)
    groups[interval_index(f.values[v], in.s2)].push_back(v);

  auto run_level = [&](int level, double rho,
                       std::vector<VertexSet>& acc) -> double {
    double worst = 0.0;
    for (const auto& [m, slab] : groups) {
      bool even = (m % 2 + 2) % 2 == 0;
      if ((level == 1) != even) continue;
      SlabRequest req;
      req.lo = static_cast<double>(m) * in.s2;
      req.hi = static_cast<double>(m + 1) * in.s2;
      req.rho = rho;
      req.span = in.s2;
      req.num_sets = K;
      req.min_coverage = coverage + 1;
      req.level = level;
      SlabCover resp = provider(req);
      validate_slab_cover(resp, req, f, slab);
      for (int j = 0; j < K; ++j)
        acc[j].insert(acc[j].end(), resp.sets[j].begin(), resp.sets[j].end());
      worst = std::max(worst, resp.reported_bound);
      (level == 1 ? in.level1_slabs : in.level2_slabs)++;
    }
    return worst;
  };

  std::vector<VertexSet> a1(K), a2(K);
  in.big_r1 = run_level(1, in.r1, a1);
  in.r2 = in.big_r1 + 2.0 * in.r1 + r;
  in.big_r2 = run_level(2, in.r2, a2);
  in.final_bound = in.big_r2 + 2.0 * in.r2;

  LineCover lc{K, in.s1};
  Cover cover;
  cover.sets.assign(K, {});
  for (int j = 0; j < K; ++j) {
    for (int v : a1[j])
      if (line_class_contains(lc, j, f.values[v])) cover.sets[j].push_back(v);
    cover.sets[j].insert(cover.sets[j].end(), a2[j].begin(), a2[j].end());
    vs_normalize(cover.sets[j]);
  }

  cover.target = all_vertices(g);
  cover.cert.scale_r = r;
  cover.cert.claimed_bound = in.final_bound;
  cover.cert.claimed_coverage = coverage;
  cover.cert.scheme_name = "stitch";
  cover.cert.parameters["K"] = K;
  cover.cert.parameters["c"] = coverage;
  cover.cert.parameters["s1"] = in.s1;
  cover.cert.parameters["S1"] = in.big_s1;
  cover.cert.parameters["s2"] = in.s2;
  cover.cert.parameters["r1"] = in.r1;
  cover.cert.parameters["R1"] = in.big_r1;
  cover.cert.parameters["r2"] = in.r2;
  cover.cert.parameters["R2"] = in.big_r2;
  if (internals) *internals = in;
  return cover;
}

SlabCover intrinsic_adapter(const WeightedGraph& g, const RealProjection& f,
                            const SlabRequest& req,
                            const IntrinsicCoverFn& inner) {
  VertexSet ext = preimage(f, req.lo - req.rho, req.hi + req.rho);
  InducedSubgraph sub = induced_subgraph(g, ext);
  DistanceOracle local(sub.graph);
  IntrinsicPiece piece{sub.graph, sub.to_orig, local, req,
                       req.span + 2.0 * req.rho};
  SlabCover local_cover = inner(piece);

  SlabCover out;
  out.reported_bound = local_cover.reported_bound;
  out.sets.assign(local_cover.sets.size(), {});
  for (size_t j = 0; j < local_cover.sets.size(); ++j) {
    for (int lv : local_cover.sets[j]) {
      int v = sub.to_orig[lv];
      if (in_half_open(f.values[v], req.lo, req.hi)) out.sets[j].push_back(v);
    }
    vs_normalize(out.sets[j]);
  }
  return out;
}

}  // namespace asdim
