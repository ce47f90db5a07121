#include "asdim/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "asdim/annulus.hpp"
#include "asdim/components.hpp"
#include "asdim/projection.hpp"

namespace asdim {

double dilation_closed_form(double a, double b, int num_sets, double r) {
  if (a < 1.0 || b < 1.0)
    throw std::invalid_argument("dilation constants must be >= 1");
  return 20.0 * a * (6.0 * a + b * (num_sets + 2)) * r;
}

namespace {

// Stitch one connected component of a minor-free graph along its rooted
// projection. Sets come back in the component's local ids.
Cover k3p_component(const WeightedGraph& g, int p, double r,
                    StitchInternals* internals) {
  DistanceOracle oracle(g, std::max(g.vertex_count(), 1));
  RealProjection f = rooted_projection(g, oracle, 0);

  SlabProvider provider = [&](const SlabRequest& req) -> SlabCover {
    if (req.lo - req.rho <= kEps) {
      // The extended slab holds the root; geodesics to it stay inside, so
      // the whole slab is 2*span_ext bounded and three copies suffice.
      VertexSet slab = preimage(f, req.lo, req.hi);
      double bound = 2.0 * (req.span + 2.0 * req.rho);
      return SlabCover{{slab, slab, slab}, bound};
    }
    return intrinsic_adapter(g, f, req, [&](const IntrinsicPiece& piece) {
      double q = 6.0 * piece.span_ext + 2.0;
      SlabCover out;
      out.sets.assign(3, {});
      out.reported_bound = annulus_bound(req.rho, q, p, 3);
      for (const VertexSet& comp : connected_components(piece.graph)) {
        InducedSubgraph sub = induced_subgraph(piece.graph, comp);
        DistanceOracle local(sub.graph, std::max(sub.graph.vertex_count(), 1));
        Cover ann = annulus_cover(sub.graph, local, 0, req.rho, q, p, 3);
        for (int j = 0; j < 3; ++j)
          for (int lv : ann.sets[j]) out.sets[j].push_back(sub.to_orig[lv]);
      }
      for (VertexSet& s : out.sets) vs_normalize(s);
      return out;
    });
  };

  return stitch(g, oracle, f, 3, 1, r, provider, internals);
}

}  // namespace

Cover k3p_cover(const WeightedGraph& g, int p, double r,
                StitchInternals* internals) {
  if (p < 2) throw std::invalid_argument("p must be >= 2");
  if (!(r > 0.0)) throw std::invalid_argument("scale must be positive");
  if (g.max_weight() > 1.0 + kEps)
    throw std::invalid_argument(
        "weights must lie in (0,1]; split heavy edges first");

  Cover cover;
  cover.sets.assign(3, {});
  cover.target = all_vertices(g);
  cover.cert.scale_r = r;
  cover.cert.claimed_coverage = 1;
  cover.cert.scheme_name = "k3p";
  cover.cert.claimed_bound = 0.0;

  StitchInternals worst{};
  for (const VertexSet& comp : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    StitchInternals in;
    Cover local = k3p_component(sub.graph, p, r, &in);
    if (local.cert.claimed_bound >= cover.cert.claimed_bound) {
      cover.cert.claimed_bound = local.cert.claimed_bound;
      worst = in;
    }
    for (int j = 0; j < 3; ++j)
      for (int lv : local.sets[j]) cover.sets[j].push_back(sub.to_orig[lv]);
  }
  for (VertexSet& s : cover.sets) vs_normalize(s);

  cover.cert.parameters["p"] = p;
  cover.cert.parameters["K"] = 3;
  cover.cert.parameters["s1"] = worst.s1;
  cover.cert.parameters["s2"] = worst.s2;
  cover.cert.parameters["r1"] = worst.r1;
  cover.cert.parameters["R1"] = worst.big_r1;
  cover.cert.parameters["r2"] = worst.r2;
  cover.cert.parameters["R2"] = worst.big_r2;
  // Intrinsic control of one extended slab of span S at scale rho:
  // (7p+10)rho + (18p+12)S + (6p+4). The additive term keeps this linear
  // type rather than dilation, so no closed form applies.
  cover.cert.parameters["env_a"] = 7.0 * p + 10.0;
  cover.cert.parameters["env_b"] = 18.0 * p + 12.0;
  cover.cert.parameters["env_d"] = 6.0 * p + 4.0;
  if (internals) *internals = worst;
  return cover;
}

Cover planar_cover(const WeightedGraph& g, double r) {
  Cover cover = k3p_cover(g, 3, r);
  cover.cert.scheme_name = "planar";
  return cover;
}

Cover genus_cover(const WeightedGraph& g, int genus, double r) {
  if (genus < 0) throw std::invalid_argument("genus must be >= 0");
  Cover cover = k3p_cover(g, 2 * genus + 3, r);
  cover.cert.scheme_name = "genus";
  cover.cert.parameters["genus"] = genus;
  return cover;
}

bool is_chordal(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  // Maximum cardinality search; ties by lowest id for determinism.
  std::vector<int> weight(n, 0), order;
  std::vector<char> picked(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!picked[v] && (best == -1 || weight[v] > weight[best])) best = v;
    picked[best] = 1;
    order.push_back(best);
    for (int u : adj[best])
      if (!picked[u]) ++weight[u];
  }
  // Reverse order is a perfect elimination ordering iff chordal: each
  // vertex's earlier-searched neighbors must sit inside the neighborhood of
  // the latest of them.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int v = 0; v < n; ++v) {
    int parent = -1;
    for (int u : adj[v])
      if (pos[u] < pos[v] && (parent == -1 || pos[u] > pos[parent])) parent = u;
    if (parent == -1) continue;
    for (int u : adj[v]) {
      if (u == parent || pos[u] >= pos[v]) continue;
      if (!adj[parent].count(u)) return false;
    }
  }
  return true;
}

Cover chordal_scheme(const WeightedGraph& g, double r) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  if (!g.unit_weighted())
    throw std::invalid_argument("chordal scheme needs unit weights");
  if (!(r >= 1.0) || std::floor(r) != r)
    throw std::invalid_argument("chordal scheme needs integer r >= 1");
  if (!is_chordal(g)) throw std::invalid_argument("graph is not chordal");

  Cover cover;
  cover.target = all_vertices(g);
  cover.cert.scale_r = r;
  cover.cert.claimed_coverage = 1;
  cover.cert.claimed_multiplicity = 2;
  cover.cert.scheme_name = "chordal";
  cover.cert.claimed_bound = 20.0 * r + 12.0;
  cover.cert.parameters["q"] = 2;
  cover.cert.parameters["p"] = 2;
  cover.cert.parameters["m"] = 2;
  cover.cert.parameters["scale_2r"] = 2.0 * r;
  cover.cert.parameters["sparse_alpha"] = 32;
  cover.cert.parameters["sparse_beta"] = 2;

  for (const VertexSet& comp : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    DistanceOracle local(sub.graph, std::max(sub.graph.vertex_count(), 1));
    Cover two = annulus_cover(sub.graph, local, 0, 2.0 * r, 2.0, 2, 2);
    two.target = all_vertices(sub.graph);
    Cover part = cover_to_partition(two);
    // Chordal graphs have no 2-fat 2-banana, so 2r-components of either
    // class are (20r+12)-bounded; each becomes its own cluster. An r-ball
    // meets at most one cluster per class.
    for (const VertexSet& cls : part.sets) {
      if (cls.empty()) continue;
      for (const VertexSet& cluster : r_components(local, cls, 2.0 * r)) {
        VertexSet orig;
        orig.reserve(cluster.size());
        for (int lv : cluster) orig.push_back(sub.to_orig[lv]);
        cover.sets.push_back(orig);
      }
    }
  }
  return cover;
}

}  // namespace asdim
