#include <doctest.h>

#include <cmath>

#include "asdim/components.hpp"
#include "asdim/generators.hpp"
#include "asdim/line_cover.hpp"
#include "asdim/pipelines.hpp"
#include "asdim/stitch.hpp"

using namespace asdim;

TEST_CASE("line cover frozen instances") {
  // K=2, s=1: class 0 drops [0,1), [2,3), ...; kept runs have length 1.
  LineCover lc2{2, 1.0};
  CHECK_FALSE(line_class_contains(lc2, 0, 0.5));
  CHECK(line_class_contains(lc2, 0, 1.5));
  double lo, hi;
  line_run_around(lc2, 0, 1.5, &lo, &hi);
  CHECK(hi - lo == doctest::Approx(1.0));

  // K=3, s=1: class 1 drops [1,2), [4,5), [7,8); runs [2,4), [5,7) remain.
  LineCover lc3{3, 1.0};
  CHECK_FALSE(line_class_contains(lc3, 1, 1.5));
  CHECK_FALSE(line_class_contains(lc3, 1, 4.0));
  CHECK(line_class_contains(lc3, 1, 2.0));
  CHECK(line_class_contains(lc3, 1, 3.9));
  line_run_around(lc3, 1, 2.0, &lo, &hi);
  CHECK(lo == doctest::Approx(2.0));
  CHECK(hi == doctest::Approx(4.0));
  line_run_around(lc3, 1, 5.5, &lo, &hi);
  CHECK(lo == doctest::Approx(5.0));
  CHECK(hi == doctest::Approx(7.0));

  // K=4, s=0.5: run length 1.5 and membership >= 3.
  LineCover lc4{4, 0.5};
  line_run_around(lc4, 2, 0.0, &lo, &hi);
  CHECK(hi - lo == doctest::Approx(1.5));
  CHECK(line_membership_count(lc4, 0.37) >= 3);
}

TEST_CASE("line cover sampled membership and run lengths") {
  Rng rng(424242);
  for (int K = 2; K <= 6; ++K) {
    for (double s : {0.5, 1.0, 3.0}) {
      LineCover lc{K, s};
      for (int t = 0; t < 2000; ++t) {
        double x = (rng.unit() - 0.25) * 40.0;  // negatives included
        CHECK(line_membership_count(lc, x) >= K - 1);
        for (int i = 0; i < K; ++i) {
          if (!line_class_contains(lc, i, x)) continue;
          double lo, hi;
          line_run_around(lc, i, x, &lo, &hi);
          CHECK(hi - lo == doctest::Approx((K - 1) * s));
          CHECK(lo <= x);
          CHECK(x < hi);
        }
      }
    }
  }
}

TEST_CASE("alternating s2-intervals partition the line with gaps > s2") {
  // Phase parity of interval_index realizes the alternating-interval split:
  // s2=5 puts 4.9 and 10.0 in distinct even intervals, value gap 5.1 > s2.
  double s2 = 5.0;
  CHECK(interval_index(4.9, s2) == 0);
  CHECK(interval_index(10.0, s2) == 2);
  CHECK(interval_index(5.0, s2) == 1);
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    double x = (rng.unit() - 0.25) * 60.0;
    long long idx = interval_index(x, s2);
    // exactly one phase holds x
    CHECK(((idx % 2 + 2) % 2 == 0) != ((idx % 2 + 2) % 2 == 1));
  }
}

TEST_CASE("stitch on a single vertex returns K near-trivial sets") {
  WeightedGraph k1;
  k1.add_vertex();
  DistanceOracle o(k1);
  RealProjection f = rooted_projection(k1, o, 0);
  SlabProvider provider = [&](const SlabRequest& req) {
    SlabCover out;
    out.sets.assign(req.num_sets, VertexSet{0});
    out.reported_bound = 0.0;
    return out;
  };
  Cover c = stitch(k1, o, f, 3, 1, 1.0, provider);
  REQUIRE(c.sets.size() == 3);
  int holding = 0;
  for (const auto& s : c.sets) {
    CHECK((s.empty() || s == VertexSet{0}));
    holding += s.empty() ? 0 : 1;
  }
  CHECK(holding >= 1);
  CHECK(verify_cover(c, o).pass);
}

TEST_CASE("stitch P_60 with a whole-slab provider") {
  WeightedGraph p60 = gen_path(60);
  DistanceOracle o(p60);
  RealProjection f = rooted_projection(p60, o, 0);

  // Trivial provider: the slab itself, K copies, bound = slab span (the
  // preimage of [lo,hi) on a path is an interval of diameter < span).
  SlabProvider provider = [&](const SlabRequest& req) {
    VertexSet verts = preimage(f, req.lo, req.hi);
    SlabCover out;
    out.sets.assign(req.num_sets, verts);
    out.reported_bound = req.span;
    return out;
  };

  StitchInternals internals;
  Cover c = stitch(p60, o, f, 3, 1, 1.0, provider, &internals);
  REQUIRE(c.sets.size() == 3);
  CHECK(internals.s2 == doctest::Approx(5.0));  // (K+2)r with K=3, r=1
  CHECK(internals.s1 == doctest::Approx(1.0));
  CHECK(internals.big_s1 == doctest::Approx(2.0));
  CHECK(internals.final_bound == doctest::Approx(internals.big_r2 + 2 * internals.r2));

  VerificationReport rep = verify_cover(c, o);
  CHECK(rep.pass);
  CHECK(rep.observed_min_coverage >= 1);
  CHECK(rep.max_component_diameter <= internals.final_bound + kEps);
}

TEST_CASE("stitch rejects providers that break the contract") {
  WeightedGraph p10 = gen_path(10);
  DistanceOracle o(p10);
  RealProjection f = rooted_projection(p10, o, 0);

  SlabProvider wrong_count = [&](const SlabRequest& req) {
    SlabCover out;
    out.sets.assign(req.num_sets - 1, preimage(f, req.lo, req.hi));
    out.reported_bound = 100.0;
    return out;
  };
  CHECK_THROWS(stitch(p10, o, f, 3, 1, 1.0, wrong_count));

  SlabProvider low_coverage = [&](const SlabRequest& req) {
    SlabCover out;
    out.sets.assign(req.num_sets, VertexSet{});
    out.sets[0] = preimage(f, req.lo, req.hi);
    out.reported_bound = 100.0;
    return out;
  };
  CHECK_THROWS(stitch(p10, o, f, 3, 2, 1.0, low_coverage));
}

TEST_CASE("intrinsic adapter extends, covers, restricts") {
  WeightedGraph p10 = gen_path(10);
  DistanceOracle o(p10);
  RealProjection f = rooted_projection(p10, o, 0);

  SlabRequest req;
  req.lo = 3.0;
  req.hi = 5.0;
  req.rho = 1.0;
  req.span = 2.0;
  req.num_sets = 1;
  req.min_coverage = 1;

  std::vector<int> seen_orig;
  IntrinsicCoverFn inner = [&](const IntrinsicPiece& piece) {
    seen_orig = piece.to_orig;
    CHECK(piece.span_ext == doctest::Approx(4.0));
    SlabCover out;
    out.sets.assign(1, all_vertices(piece.graph));
    out.reported_bound = weak_diameter(piece.oracle, all_vertices(piece.graph));
    return out;
  };
  SlabCover got = intrinsic_adapter(p10, f, req, inner);

  // Extension pulls in f in [2,6); restriction keeps only [3,5).
  CHECK(seen_orig == std::vector<int>{2, 3, 4, 5});
  REQUIRE(got.sets.size() == 1);
  CHECK(got.sets[0] == VertexSet{3, 4});
  // Reported bound grows by the Lipschitz slack of the extension.
  CHECK(got.reported_bound >= 3.0 - kEps);
}

TEST_CASE("dilation closed form matches its definition") {
  // 20a(6a + b(K+2))r with a = b = 1, K = 3: 20*(6+5) = 220 per unit r.
  CHECK(dilation_closed_form(1.0, 1.0, 3, 1.0) == doctest::Approx(220.0));
  CHECK(dilation_closed_form(1.0, 1.0, 3, 2.0) == doctest::Approx(440.0));
  CHECK(dilation_closed_form(2.0, 1.0, 4, 1.0) == doctest::Approx(2 * 20.0 * (12.0 + 6.0)));
}
