#include <doctest.h>

#include "lgg/graph.hpp"

using namespace lgg;

namespace {

PointSet collinear3() {
  return PointSet({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(2), Rational(0)}});
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("build and degrees") {
  GeometricGraph g = build_graph(collinear3(), {{0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.neighbors(1) == std::vector<VertexId>{0, 2});
  CHECK(g.neighbors(0) == std::vector<VertexId>{1});
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(build_graph(collinear3(), {{0, 1}, {1, 0}}), Error);  // duplicate edge
  CHECK_THROWS_AS(build_graph(collinear3(), {{0, 0}}), Error);          // self loop
  CHECK_THROWS_AS(build_graph(collinear3(), {{0, 3}}), Error);          // out of range
  CHECK_THROWS_AS(PointSet({{Rational(1), Rational(2)}, {Rational(1), Rational(2)}}), Error);
  try {
    build_graph(collinear3(), {{0, 1}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateEdge);
  }
}

TEST_CASE("isolated vertices have no neighbors") {
  GeometricGraph g = build_graph(collinear3(), {{0, 1}});
  CHECK(g.neighbors(2).empty());
  CHECK_THROWS_AS(g.neighbors(3), Error);
}

TEST_CASE("complete graphs") {
  PointSet one({{Rational(5), Rational(5)}});
  CHECK(complete_graph(one).edge_count() == 0);

  std::vector<Point> quad;
  for (long i = 0; i < 4; ++i) quad.push_back({Rational(i), Rational(i * i)});
  GeometricGraph k4 = complete_graph(PointSet(quad));
  CHECK(k4.edge_count() == 6);
  for (VertexId v = 0; v < 4; ++v) CHECK(k4.neighbors(v).size() == 3);

  std::vector<Point> ten;
  for (long i = 0; i < 10; ++i) ten.push_back({Rational(i), Rational(i * i)});
  CHECK(complete_graph(PointSet(ten)).edge_count() == 45);
}

TEST_CASE("degree sum equals twice the edge count") {
  std::vector<Point> pts;
  for (long i = 0; i < 9; ++i) pts.push_back({Rational(i % 3), Rational(i / 3)});
  GeometricGraph g = build_graph(PointSet(pts), {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 4}, {2, 4}});
  std::size_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
  CHECK(total == 2 * g.edge_count());
}

TEST_CASE("edge subgraph keeps points and reindexes edges") {
  GeometricGraph g = build_graph(collinear3(), {{0, 1}, {1, 2}});
  GeometricGraph sub = g.edge_subgraph({1});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 1);
  CHECK(sub.edge(0).a == 1);
  CHECK(sub.edge(0).b == 2);
}

TEST_SUITE_END();
