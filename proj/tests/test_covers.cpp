#include <doctest.h>

#include "asdim/annulus.hpp"
#include "asdim/cover.hpp"
#include "asdim/generators.hpp"
#include "asdim/line_cover.hpp"
#include "asdim/oracle.hpp"

using namespace asdim;

namespace {

Cover even_odd_p10(const WeightedGraph& g) {
  Cover c;
  c.sets.resize(2);
  for (int v = 0; v < 10; ++v) c.sets[v % 2 == 0 ? 0 : 1].push_back(v);
  c.target = all_vertices(g);
  c.cert.scale_r = 1.0;
  c.cert.claimed_bound = 0.0;
  c.cert.claimed_coverage = 1;
  c.cert.scheme_name = "handmade";
  return c;
}

}  // namespace

TEST_CASE("verify_cover pass and fail shapes") {
  WeightedGraph p10 = gen_path(10);
  DistanceOracle o(p10);

  // One set holding everything, claiming the graph diameter.
  Cover whole;
  whole.sets = {all_vertices(p10)};
  whole.target = all_vertices(p10);
  whole.cert.scale_r = 1.0;
  whole.cert.claimed_bound = 9.0;
  whole.cert.claimed_coverage = 1;
  CHECK(verify_cover(whole, o).pass);

  // Alternating parities: every 1-component is a singleton, bound 0 passes.
  Cover eo = even_odd_p10(p10);
  VerificationReport rep = verify_cover(eo, o);
  CHECK(rep.pass);
  CHECK(rep.max_component_diameter == 0.0);
  CHECK(rep.observed_min_coverage == 1);

  // Same sets claiming coverage 2: each vertex lies in exactly one.
  Cover bad = eo;
  bad.cert.claimed_coverage = 2;
  VerificationReport rep2 = verify_cover(bad, o);
  CHECK_FALSE(rep2.pass);
  CHECK_FALSE(rep2.failures.empty());

  // Diameter violation is caught too.
  Cover tight = whole;
  tight.cert.claimed_bound = 1.0;
  CHECK_FALSE(verify_cover(tight, o).pass);
}

TEST_CASE("cover_to_partition keeps claims and drops overlap") {
  WeightedGraph p10 = gen_path(10);
  DistanceOracle o(p10);

  Cover eo = even_odd_p10(p10);
  Cover part = cover_to_partition(eo);
  CHECK(part.sets == eo.sets);  // already disjoint

  Cover twin;
  twin.sets = {all_vertices(p10), all_vertices(p10)};
  twin.target = all_vertices(p10);
  twin.cert.scale_r = 1.0;
  twin.cert.claimed_bound = 9.0;
  twin.cert.claimed_coverage = 2;
  Cover tp = cover_to_partition(twin);
  CHECK(tp.sets[0] == all_vertices(p10));
  CHECK(tp.sets[1].empty());
  CHECK(tp.cert.claimed_coverage == 1);
  CHECK(verify_cover(tp, o).pass);

  Cover gap = eo;
  gap.sets[0].erase(gap.sets[0].begin());  // v0 now uncovered
  CHECK_THROWS(cover_to_partition(gap));
}

TEST_CASE("line-cover residues give a disjoint 3-partition of P_6") {
  WeightedGraph p6 = gen_path(6);
  DistanceOracle o(p6);
  LineCover lc{3, 1.0};

  Cover c;
  c.sets.resize(3);
  for (int v = 0; v < 6; ++v)
    for (int i = 0; i < 3; ++i)
      if (line_class_contains(lc, i, (double)v)) c.sets[i].push_back(v);
  c.target = all_vertices(p6);
  c.cert.scale_r = 1.0;
  c.cert.claimed_bound = 5.0;
  c.cert.claimed_coverage = 2;
  REQUIRE(verify_cover(c, o).pass);

  Cover part = cover_to_partition(c);
  VerificationReport rep = verify_cover(part, o);
  CHECK(rep.pass);
  CHECK(rep.observed_min_coverage == 1);
  int total = 0;
  for (const auto& s : part.sets) total += (int)s.size();
  CHECK(total == 6);  // coverage exactly 1
}

TEST_CASE("partition never worsens per-set component diameters") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    WeightedGraph g = random_connected_graph(seed, 12, 6, true);
    DistanceOracle o(g);
    Rng rng(seed);
    Cover c;
    c.sets.resize(3);
    for (int v = 0; v < 12; ++v) {
      c.sets[rng.below(3)].push_back(v);
      c.sets[rng.below(3)].push_back(v);
    }
    for (auto& s : c.sets) vs_normalize(s);
    c.target = all_vertices(g);
    c.cert.scale_r = 1.0;
    c.cert.claimed_bound = 100.0;
    c.cert.claimed_coverage = 1;
    VerificationReport before = verify_cover(c, o);
    REQUIRE(before.pass);
    VerificationReport after = verify_cover(cover_to_partition(c), o);
    REQUIRE(after.pass);
    CHECK(after.max_component_diameter <= before.max_component_diameter + kEps);
  }
}

TEST_CASE("r_multiplicity fixed values") {
  WeightedGraph p10 = gen_path(10);
  DistanceOracle o(p10);

  CHECK(r_multiplicity(even_odd_p10(p10), o, 1.0) == 2);

  // Far-apart singleton sets: unit balls only ever meet one.
  Cover far;
  far.sets = {{0}, {9}};
  far.target = {0, 9};
  far.cert.scale_r = 1.0;
  CHECK(r_multiplicity(far, o, 1.0) == 1);
}

TEST_CASE("weak diameter coloring on P_10 parities") {
  WeightedGraph p10 = gen_path(10);
  DistanceOracle o(p10);

  Cover whole;
  whole.sets = {all_vertices(p10)};
  whole.target = all_vertices(p10);
  whole.cert.scale_r = 1.0;
  whole.cert.claimed_bound = 9.0;
  ColoringResult one = weak_diameter_coloring(whole, p10, o);
  CHECK(one.colors_used == 1);
  CHECK(one.max_monochromatic_weak_diameter == doctest::Approx(9.0));

  ColoringResult two = weak_diameter_coloring(even_odd_p10(p10), p10, o);
  CHECK(two.colors_used == 2);
  CHECK(two.max_monochromatic_weak_diameter == 0.0);
  for (int v = 0; v < 10; ++v) CHECK(two.color[v] == v % 2);
}

TEST_CASE("annulus cover on P_10: frozen decomposition and sets") {
  WeightedGraph p10 = gen_path(10);
  DistanceOracle o(p10);

  CHECK(annulus_k0(1.0, 1.0, 2) == 3);
  AnnulusDecomposition dec = build_annulus_decomposition(p10, o, 0, 1.0, 1.0, 2);
  CHECK(dec.k0 == 3);
  CHECK(dec.core == VertexSet{0, 1, 2});
  REQUIRE(dec.annuli.count(3));
  CHECK(dec.annuli.at(3) == VertexSet{3});
  CHECK(dec.annuli.size() == 7);  // annuli 3..9, one vertex each

  Cover c = annulus_cover(p10, o, 0, 1.0, 1.0, 2, 2);
  REQUIRE(c.sets.size() == 2);
  CHECK(c.sets[0] == VertexSet{0, 1, 2, 4, 6, 8});
  CHECK(c.sets[1] == VertexSet{3, 5, 7, 9});

  VerificationReport rep = verify_cover(c, o);
  CHECK(rep.pass);
  CHECK(rep.max_component_diameter <= 2.0 + kEps);

  // Strict separation: same-set annuli two apart never chain at scale r.
  for (const auto& s : c.sets)
    for (const auto& comp : r_components(o, s, 1.0))
      CHECK(weak_diameter(o, comp) <= 2.0 + kEps);
}

TEST_CASE("annulus cover rejects bad inputs") {
  WeightedGraph p10 = gen_path(10);
  DistanceOracle o(p10);
  CHECK_THROWS(annulus_cover(p10, o, 0, -1.0, 1.0, 2, 2));
  CHECK_THROWS(annulus_cover(p10, o, 0, 1.0, -1.0, 2, 2));
  CHECK_THROWS(annulus_cover(p10, o, 0, 1.0, 1.0, 1, 2));
  CHECK_THROWS(annulus_cover(p10, o, 0, 1.0, 1.0, 2, 1));

  WeightedGraph two;
  two.add_vertex();
  two.add_vertex();
  DistanceOracle o2(two);
  CHECK_THROWS(annulus_cover(two, o2, 0, 1.0, 1.0, 2, 2));
}

TEST_CASE("annulus K_1 and coverage counts for m = 3") {
  WeightedGraph k1;
  k1.add_vertex();
  DistanceOracle o1(k1);
  Cover c1 = annulus_cover(k1, o1, 0, 1.0, 2.0, 2, 2);
  CHECK(verify_cover(c1, o1).pass);

  WeightedGraph p30 = gen_path(30);
  DistanceOracle o(p30);
  Cover c = annulus_cover(p30, o, 0, 1.0, 2.0, 2, 3);
  REQUIRE(c.sets.size() == 3);
  CHECK(c.cert.claimed_coverage == 2);
  CHECK(verify_cover(c, o).pass);

  // Off-core vertices lie in exactly m-1 sets; core too.
  std::vector<int> count(30, 0);
  for (const auto& s : c.sets)
    for (int v : s) count[v]++;
  for (int v = 0; v < 30; ++v) CHECK(count[v] == 2);
}
