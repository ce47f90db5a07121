#include <doctest.h>

#include <cmath>

#include "asdim/components.hpp"
#include "asdim/generators.hpp"
#include "asdim/graph.hpp"
#include "asdim/oracle.hpp"
#include "asdim/oracles.hpp"
#include "asdim/projection.hpp"

using namespace asdim;

TEST_CASE("shortest paths on fixed small graphs") {
  WeightedGraph k1;
  k1.add_vertex();
  DistanceOracle o1(k1);
  CHECK(o1.dist(0, 0) == 0.0);

  WeightedGraph p3 = gen_path(3);
  DistanceOracle o3(p3);
  CHECK(o3.dist(0, 0) == 0.0);
  CHECK(o3.dist(0, 1) == 1.0);
  CHECK(o3.dist(0, 2) == 2.0);

  // Heavy direct edge loses to the two-hop route.
  WeightedGraph tri;
  for (int i = 0; i < 3; ++i) tri.add_vertex();
  tri.add_edge(0, 1, 1.0);
  tri.add_edge(1, 2, 1.0);
  tri.add_edge(0, 2, 3.0);
  DistanceOracle ot(tri);
  CHECK(ot.dist(0, 2) == doctest::Approx(2.0));

  CHECK_THROWS(ot.dist(0, 7));
}

TEST_CASE("rooted projection values and Lipschitz") {
  WeightedGraph p4 = gen_path(4);
  DistanceOracle o4(p4);
  RealProjection f4 = rooted_projection(p4, o4, 0);
  for (int v = 0; v < 4; ++v) CHECK(f4(v) == doctest::Approx((double)v));
  CHECK(is_lipschitz(p4, f4));

  WeightedGraph c6 = gen_cycle(6);
  DistanceOracle o6(c6);
  RealProjection f6 = rooted_projection(c6, o6, 0);
  double want[6] = {0, 1, 2, 3, 2, 1};
  for (int v = 0; v < 6; ++v) CHECK(f6(v) == doctest::Approx(want[v]));
  CHECK(is_lipschitz(c6, f6));
}

TEST_CASE("r_components on P_5 at the 2-apart set") {
  WeightedGraph p5 = gen_path(5);
  DistanceOracle o(p5);
  VertexSet s = {0, 2, 4};

  CHECK(r_components(o, {}, 1.0).empty());

  auto singletons = r_components(o, s, 1.0);
  CHECK(singletons.size() == 3);
  for (const auto& c : singletons) CHECK(c.size() == 1);

  auto one = r_components(o, s, 2.0);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == s);
}

TEST_CASE("rs_components collapse and projection splitting") {
  WeightedGraph p5 = gen_path(5);
  DistanceOracle o(p5);
  RealProjection f = rooted_projection(p5, o, 0);

  // sp >= r makes the projection constraint vacuous.
  VertexSet all = all_vertices(p5);
  auto plain = r_components(o, all, 2.0);
  auto both = rs_components(o, f, all, 2.0, 2.0);
  CHECK(plain == both);

  auto joined = rs_components(o, f, {1, 3}, 4.0, 3.0);
  CHECK(joined.size() == 1);
}

TEST_CASE("nine-vertex witness: one 4-component, two (4,3)-components") {
  // Cycle C_9 rooted at v0: d(v0,v4) = 4 and f(v4) = 4, so {v0,v4} chains
  // into one 4-component but the projection gap 4 > 3 splits the
  // (4,3)-relation.
  WeightedGraph g = gen_cycle(9);
  DistanceOracle o(g);
  RealProjection f = rooted_projection(g, o, 0);
  CHECK(o.dist(0, 4) == doctest::Approx(4.0));
  CHECK(f(4) == doctest::Approx(4.0));
  VertexSet s = {0, 4};
  CHECK(r_components(o, s, 4.0).size() == 1);
  CHECK(rs_components(o, f, s, 4.0, 3.0).size() == 2);
}

TEST_CASE("weak diameter fixed values") {
  WeightedGraph p5 = gen_path(5);
  DistanceOracle o(p5);
  CHECK(weak_diameter(o, {2}) == 0.0);
  CHECK(weak_diameter(o, {0, 4}) == doctest::Approx(4.0));

  WeightedGraph c6 = gen_cycle(6);
  DistanceOracle o6(c6);
  CHECK(weak_diameter(o6, {0, 2, 3}) == doctest::Approx(3.0));

  CHECK_THROWS(weak_diameter(o, {}));

  WeightedGraph two;
  two.add_vertex();
  two.add_vertex();
  DistanceOracle o2(two);
  CHECK(weak_diameter(o2, {0, 1}) == kInf);
}

TEST_CASE("induced subgraph is intrinsic: distances never shrink") {
  WeightedGraph c6 = gen_cycle(6);
  DistanceOracle og(c6);

  VertexSet keep = {1, 2, 3, 4, 5};  // drop v0: cycle opens into a path
  InducedSubgraph sub = induced_subgraph(c6, keep);
  CHECK(sub.graph.vertex_count() == 5);
  DistanceOracle oh(sub.graph);

  int l1 = -1, l5 = -1;
  for (int i = 0; i < 5; ++i) {
    if (sub.to_orig[i] == 1) l1 = i;
    if (sub.to_orig[i] == 5) l5 = i;
  }
  CHECK(og.dist(1, 5) == doctest::Approx(2.0));
  CHECK(oh.dist(l1, l5) == doctest::Approx(4.0));

  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      CHECK(oh.dist(a, b) >= og.dist(sub.to_orig[a], sub.to_orig[b]) - kEps);

  InducedSubgraph empty = induced_subgraph(c6, {});
  CHECK(empty.graph.vertex_count() == 0);

  InducedSubgraph full = induced_subgraph(c6, all_vertices(c6));
  CHECK(full.graph.vertex_count() == 6);
  CHECK(full.graph.edge_count() == 6);
}

TEST_CASE("edge subdivision preserves original distances") {
  WeightedGraph g;
  g.add_vertex();
  g.add_vertex();
  g.add_edge(0, 1, 2.0);
  WeightedGraph s = subdivide_edge(g, 0, {0.5, 0.5});
  CHECK(s.vertex_count() == 3);
  DistanceOracle o(s);
  CHECK(o.dist(0, 1) == doctest::Approx(2.0));

  // Fraction splits preserve distances; find the second edge of P_3 after
  // the first split moved indices.
  WeightedGraph p3 = gen_path(3);
  WeightedGraph once = subdivide_edge(p3, 0, {0.5, 0.5});
  int second = -1;
  for (int i = 0; i < (int)once.edge_count(); ++i) {
    const Edge& e = once.edges()[i];
    if ((e.u == 1 && e.v == 2) || (e.u == 2 && e.v == 1)) second = i;
  }
  REQUIRE(second >= 0);
  WeightedGraph p5 = subdivide_edge(once, second, {0.5, 0.5});
  CHECK(p5.vertex_count() == 5);
  DistanceOracle o5(p5);
  CHECK(o5.dist(0, 2) == doctest::Approx(2.0));

  // Unit k-subdivision scales original distances by k+1 instead.
  WeightedGraph scaled = subdivide_all(p3, 1);
  CHECK(scaled.vertex_count() == 5);
  DistanceOracle os(scaled);
  CHECK(os.dist(0, 2) == doctest::Approx(4.0));

  CHECK_THROWS(subdivide_edge(g, 0, {1.5, -0.5}));
}

TEST_CASE("r_components equals threshold-graph reference on random graphs") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    WeightedGraph g = random_connected_graph(seed, 9, 4, seed % 2 == 0);
    DistanceOracle o(g);
    Rng rng(seed * 77);
    for (double r : {0.3, 1.0, 2.5}) {
      VertexSet s;
      for (int v = 0; v < (int)g.vertex_count(); ++v)
        if (rng.below(3)) s.push_back(v);
      auto got = r_components(o, s, r);
      auto want = reference_r_components(g, s, r);
      CHECK(got == want);
    }
  }
}
