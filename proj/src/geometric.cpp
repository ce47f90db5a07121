#include "asdim/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "asdim/components.hpp"
#include "asdim/projection.hpp"
#include "asdim/stitch.hpp"

namespace asdim {

namespace {

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void check_points_shape(const WeightedGraph& g, const Embedding& emb) {
  if (emb.d < 1) throw std::invalid_argument("embedding dimension must be >= 1");
  if ((int)emb.points.size() != g.vertex_count())
    throw std::invalid_argument("one point per vertex required");
  for (const auto& p : emb.points)
    if ((int)p.size() != emb.d)
      throw std::invalid_argument("point arity differs from dimension");
  if (!emb.unit_ball && emb.stretch < 1.0)
    throw std::invalid_argument("stretch must be >= 1");
}

}  // namespace

std::vector<std::string> validate_embedding(const WeightedGraph& g,
                                            const Embedding& emb) {
  check_points_shape(g, emb);
  std::vector<std::string> bad;
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double d = euclid(emb.points[u], emb.points[v]);
      if (emb.unit_ball) {
        if (adj[u][v] && d > 1.0 + kEps)
          bad.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " spans distance " + fmt(d) + " > 1");
        if (!adj[u][v] && d < 1.0 - kEps)
          bad.push_back("non-edge " + std::to_string(u) + "-" +
                        std::to_string(v) + " at distance " + fmt(d) +
                        " <= 1");
      } else {
        if (d < 1.0 - kEps)
          bad.push_back("points " + std::to_string(u) + "," +
                        std::to_string(v) + " only " + fmt(d) + " apart");
        if (adj[u][v] && d > emb.stretch + kEps)
          bad.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " spans distance " + fmt(d) + " > stretch " +
                        fmt(emb.stretch));
      }
    }
  }
  return bad;
}

namespace {

struct GeoParams {
  int d = 1;
  int num_sets = 2;
  double divisor = 1.0;
  bool unit_ball = false;
};

struct GeoPiece {
  const WeightedGraph& g;
  const DistanceOracle& oracle;
  const std::vector<std::vector<double>>& pts;
};

long long separation_packing_limit(int d, double kbox) {
  const double per_axis = std::ceil(kbox * std::sqrt((double)d)) + 1.0;
  const double limit = std::pow(per_axis, (double)d);
  if (limit > 9.0e18) return (long long)9e18;
  return (long long)llround(limit);
}

double unit_ball_base_bound(int d, double kbox) {
  const double per_axis = std::ceil(std::sqrt((double)d) * kbox);
  return 2.0 * std::pow(std::max(per_axis, 1.0), (double)d);
}

int min_hits(const std::vector<VertexSet>& sets, int n) {
  std::vector<int> hits(n, 0);
  for (const auto& s : sets)
    for (int v : s) hits[v] += 1;
  int mn = n == 0 ? 0 : hits[0];
  for (int v = 0; v < n; ++v) mn = std::min(mn, hits[v]);
  return mn;
}

Cover geo_rec(const GeoPiece& piece, const GeoParams& P, int free_i,
              int cov_target, double rho, double kbox, GeoTrace* trace) {
  const int n = piece.g.vertex_count();
  const int K = P.num_sets;
  GeoLevel lvl;
  lvl.free_i = free_i;
  lvl.cov_target = cov_target;
  lvl.rho = rho;
  lvl.kbox = kbox;
  lvl.piece_vertices = n;

  Cover cover;
  cover.target = all_vertices(piece.g);

  if (free_i == 0) {
    if (cov_target > K)
      throw std::logic_error("base case asked for coverage above set count");
    lvl.base_case = true;
    double bound = 0.0;
    if (P.unit_ball) {
      bound = unit_ball_base_bound(P.d, kbox);
      // Shortest paths meet each small cube at most twice, so a connected
      // base piece has intrinsic diameter below the cube-count bound.
      for (const auto& comp : connected_components(piece.g)) {
        const double diam = comp.size() <= 1
                                ? 0.0
                                : weak_diameter(piece.oracle, comp);
        if (diam > bound + kEps)
          throw std::logic_error("base piece diameter " + fmt(diam) +
                                 " above unit-ball bound " + fmt(bound));
      }
    } else {
      lvl.packing_limit = separation_packing_limit(P.d, kbox);
      if ((long long)n > lvl.packing_limit)
        throw std::logic_error("base piece holds " + std::to_string(n) +
                               " points, packing allows " +
                               std::to_string(lvl.packing_limit));
      bound = (double)n * rho;
    }
    lvl.bound = bound;
    lvl.observed_coverage = K;
    cover.sets.assign(K, cover.target);
    cover.cert.scale_r = rho;
    cover.cert.claimed_bound = bound;
    cover.cert.claimed_coverage = K;
    cover.cert.scheme_name = "geometric-base";
    if (trace) trace->levels.push_back(lvl);
    return cover;
  }

  const int axis = free_i - 1;
  RealProjection f = coordinate_projection(piece.pts, axis, P.divisor);
  std::string violation;
  if (!is_lipschitz(piece.g, f, &violation))
    throw std::logic_error("coordinate projection not 1-Lipschitz: " +
                           violation);

  SlabProvider provider = [&](const SlabRequest& req) -> SlabCover {
    IntrinsicCoverFn inner = [&](const IntrinsicPiece& ip) -> SlabCover {
      std::vector<std::vector<double>> local_pts(ip.to_orig.size());
      for (size_t i = 0; i < ip.to_orig.size(); ++i)
        local_pts[i] = piece.pts[ip.to_orig[i]];
      const double kbox_next =
          std::max(kbox, P.divisor * (req.span + 2.0 * req.rho));
      GeoPiece local{ip.graph, ip.oracle, local_pts};
      Cover inner_cover = geo_rec(local, P, free_i - 1, cov_target + 1,
                                  req.rho, kbox_next, trace);
      SlabCover sc;
      sc.sets = inner_cover.sets;
      sc.reported_bound = inner_cover.cert.claimed_bound;
      return sc;
    };
    return intrinsic_adapter(piece.g, f, req, inner);
  };

  cover = stitch(piece.g, piece.oracle, f, K, cov_target, rho, provider);
  lvl.bound = cover.cert.claimed_bound;
  lvl.observed_coverage = min_hits(cover.sets, n);
  if (lvl.observed_coverage < cov_target)
    throw std::logic_error("coverage ledger broken at free_i=" +
                           std::to_string(free_i) + ": observed " +
                           std::to_string(lvl.observed_coverage) + " < " +
                           std::to_string(cov_target));
  if (trace) trace->levels.push_back(lvl);
  return cover;
}

}  // namespace

Cover geometric_cover(const WeightedGraph& g, const Embedding& emb, double r,
                      GeoTrace* trace) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  if (r <= 0) throw std::invalid_argument("scale must be positive");
  check_points_shape(g, emb);
  for (const auto& e : g.edges()) {
    if (emb.unit_ball) {
      if (std::abs(e.w - 1.0) > kEps)
        throw std::invalid_argument("unit-ball mode needs unit edge weights");
    } else if (e.w < 1.0 - kEps) {
      throw std::invalid_argument("separation mode needs edge weights >= 1");
    }
  }
  auto bad = validate_embedding(g, emb);
  if (!bad.empty())
    throw std::invalid_argument("embedding invalid: " + bad.front() +
                                (bad.size() > 1
                                     ? " (+" + std::to_string(bad.size() - 1) +
                                           " more)"
                                     : ""));

  GeoParams P;
  P.d = emb.d;
  P.num_sets = emb.d + 1;
  P.divisor = emb.unit_ball ? 1.0 : emb.stretch;
  P.unit_ball = emb.unit_ball;

  DistanceOracle oracle(g);
  GeoPiece piece{g, oracle, emb.points};
  Cover cover = geo_rec(piece, P, emb.d, 1, r, 0.0, trace);
  if ((int)cover.sets.size() != P.num_sets)
    throw std::logic_error("expected d+1 sets");
  cover.cert.scale_r = r;
  cover.cert.claimed_coverage = 1;
  cover.cert.scheme_name = emb.unit_ball ? "unit-ball" : "geometric";
  cover.cert.parameters["d"] = (double)emb.d;
  cover.cert.parameters["num_sets"] = (double)P.num_sets;
  cover.cert.parameters["divisor"] = P.divisor;
  cover.cert.parameters["mode_unit_ball"] = emb.unit_ball ? 1.0 : 0.0;
  return cover;
}

WeightedGraph build_unit_ball_graph(
    const std::vector<std::vector<double>>& points) {
  const int n = (int)points.size();
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (euclid(points[u], points[v]) <= 1.0 + kEps) g.add_edge(u, v, 1.0);
  return g;
}

Cover unit_ball_cover(const std::vector<std::vector<double>>& points, double r,
                      GeoTrace* trace) {
  if (points.empty()) throw std::invalid_argument("no points");
  Embedding emb;
  emb.d = (int)points[0].size();
  emb.unit_ball = true;
  emb.points = points;
  WeightedGraph g = build_unit_ball_graph(points);
  return geometric_cover(g, emb, r, trace);
}

Cover grid_subgraph_cover(const WeightedGraph& g,
                          const std::vector<std::vector<double>>& coords,
                          double r, GeoTrace* trace) {
  for (const auto& p : coords)
    for (double x : p)
      if (std::abs(x - std::llround(x)) > kEps)
        throw std::invalid_argument("grid coordinates must be integral");
  Embedding emb;
  emb.d = coords.empty() ? 1 : (int)coords[0].size();
  emb.stretch = 1.0;
  emb.unit_ball = false;
  emb.points = coords;
  return geometric_cover(g, emb, r, trace);
}

}  // namespace asdim
