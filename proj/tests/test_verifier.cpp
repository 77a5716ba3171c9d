#include <doctest.h>

#include "corpus.hpp"
#include "lgg/gabriel.hpp"
#include "lgg/generators.hpp"
#include "lgg/oracles.hpp"
#include "lgg/predicates.hpp"
#include "lgg/verifier.hpp"

using namespace lgg;

namespace {

PointSet square() {
  return PointSet({{Rational(0), Rational(0)},
                   {Rational(1), Rational(0)},
                   {Rational(1), Rational(1)},
                   {Rational(0), Rational(1)}});
}

GeometricGraph square_sides() { return build_graph(square(), {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

}  // namespace

TEST_SUITE_BEGIN("verifier");

TEST_CASE("angular ring orders by angle from the positive x axis") {
  PointSet pts({{Rational(0), Rational(0)},
                {Rational(1), Rational(0)},
                {Rational(0), Rational(1)},
                {Rational(-1), Rational(0)},
                {Rational(0), Rational(-1)}});
  GeometricGraph g = build_graph(pts, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(angular_ring(g, 0).ring == std::vector<VertexId>{1, 2, 3, 4});
}

TEST_CASE("angular ring breaks same-ray ties by distance") {
  PointSet pts({{Rational(0), Rational(0)}, {Rational(2), Rational(0)}, {Rational(1), Rational(0)}});
  GeometricGraph g = build_graph(pts, {{0, 1}, {0, 2}});
  CHECK(angular_ring(g, 0).ring == std::vector<VertexId>{2, 1});  // nearer first
  GeometricGraph empty = build_graph(pts, {{1, 2}});
  CHECK(angular_ring(empty, 0).ring.empty());
}

TEST_CASE("square sides form a valid LGG") {
  VerifyResult r = verify_lgg(square_sides());
  CHECK(r.valid);
  CHECK_FALSE(r.witness.has_value());
  CHECK(oracles::brute_force_lgg_valid(square_sides()));
}

TEST_CASE("square plus diagonal is invalid with a deterministic witness") {
  GeometricGraph g = build_graph(square(), {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  VerifyResult r = verify_lgg(g);
  REQUIRE_FALSE(r.valid);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->shared == 0);
  CHECK(r.witness->first == 1);   // ring at 0: angle 0
  CHECK(r.witness->second == 2);  // then the diagonal at 45 degrees
  CHECK(verify_lgg_serial(g).witness == r.witness);
  CHECK_FALSE(oracles::brute_force_lgg_valid(g));
}

TEST_CASE("all conflicting pairs on the square family") {
  GeometricGraph diag2 = build_graph(square(), {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}});
  CHECK(all_conflicting_pairs(diag2).size() == 8);
  CHECK(all_conflicting_pairs(square_sides()).empty());

  PointSet line({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(2), Rational(0)}});
  GeometricGraph path = build_graph(line, {{0, 1}, {0, 2}});
  auto v = all_conflicting_pairs(path);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == Violation{0, 1, 2});
}

TEST_CASE("graphs with no edges are trivially valid") {
  GeometricGraph g = build_graph(square(), {});
  CHECK(verify_lgg(g).valid);
}

TEST_CASE("verifier agrees with the brute-force oracle on a random corpus") {
  int invalid_seen = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    std::size_t n = 4 + seed % 22;
    PointSet pts = corpus::random_points(n, seed);
    GeometricGraph g = corpus::random_edge_subset(pts, seed, 18);
    VerifyResult fast = verify_lgg(g);
    VerifyResult slow = verify_lgg_serial(g);
    bool oracle = oracles::brute_force_lgg_valid(g);
    CHECK(fast.valid == oracle);
    CHECK(slow.valid == oracle);
    CHECK(fast.witness == slow.witness);
    if (!fast.valid) ++invalid_seen;
  }
  CHECK(invalid_seen > 10);  // the corpus must actually exercise violations
}

TEST_CASE("consecutive ring pair conflicts whenever any incident pair does") {
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    PointSet pts = corpus::random_points(5 + seed % 14, seed);
    GeometricGraph g = corpus::random_edge_subset(pts, seed, 25);
    auto violations = all_conflicting_pairs(g);
    if (violations.empty()) continue;
    VertexId u = violations.front().shared;
    AngularRing ring = angular_ring(g, u);
    const std::size_t l = ring.ring.size();
    bool consecutive_conflict = false;
    const std::size_t pairs = (l == 2) ? 1 : l;
    for (std::size_t i = 0; i < pairs && !consecutive_conflict; ++i)
      if (edges_conflict(g.point(u), g.point(ring.ring[i]), g.point(ring.ring[(i + 1) % l])))
        consecutive_conflict = true;
    CHECK(consecutive_conflict);
  }
}

TEST_CASE("validity is monotone under edge removal") {
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    PointSet pts = corpus::random_points(10, seed);
    GeometricGraph g = gabriel_graph(pts);  // valid by construction
    REQUIRE(verify_lgg(g).valid);
    std::mt19937_64 rng(seed);
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (rng() & 1) keep.push_back(e);
    CHECK(verify_lgg(g.edge_subgraph(keep)).valid);
  }
}

TEST_CASE("valid graphs exclude K_2_3") {
  for (std::uint64_t seed = 400; seed < 440; ++seed) {
    PointSet pts = corpus::random_points(5 + seed % 11, seed);
    GeometricGraph g = corpus::random_edge_subset(pts, seed, 35);
    if (verify_lgg(g).valid) CHECK_FALSE(corpus::has_k23(g));
  }
}

TEST_CASE("unit distance grids pass") {
  CHECK(verify_lgg(gen_unit_distance_grid(2, 2)).valid);
  CHECK(verify_lgg(gen_unit_distance_grid(1, 5)).valid);
  CHECK(verify_lgg(gen_unit_distance_grid(17, 23)).valid);
}

TEST_CASE("parallel kernel matches the serial reference on rational coordinates") {
  // quarter-unit lattice: coordinates are non-integer rationals, so this
  // exercises the exact-rational kernel rather than the int64 one
  std::vector<Point> pts;
  for (long i = 0; i < 5; ++i)
    for (long j = 0; j < 5; ++j) pts.push_back({Rational(i, 4), Rational(j, 4)});
  PointSet ps(pts);
  GeometricGraph g = corpus::random_edge_subset(ps, 99, 20);
  VerifyResult a = verify_lgg(g);
  VerifyResult b = verify_lgg_serial(g);
  CHECK(a.valid == b.valid);
  CHECK(a.witness == b.witness);
}

TEST_SUITE_END();
