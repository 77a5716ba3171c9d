#include <doctest.h>

#include <random>

#include "lgg/predicates.hpp"

using namespace lgg;

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }
Point pt(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }

}  // namespace

TEST_SUITE_BEGIN("predicates");

TEST_CASE("dot_gauge on the reference triples") {
  CHECK(dot_gauge(pt(0, 0), pt(2, 0), pt(1, 1)) == Rational(0));   // right angle at w
  CHECK(dot_gauge(pt(0, 0), pt(2, 0), pt(1, 2)) == Rational(3));   // acute
  CHECK(dot_gauge(pt(0, 0), pt(2, 0), pt(Rational(1), Rational(1, 2))) == Rational(-3, 4));
}

TEST_CASE("closed diametral disk") {
  CHECK(in_closed_diametral_disk(pt(0, 0), pt(2, 0), pt(1, 1)));   // boundary counts
  CHECK_FALSE(in_closed_diametral_disk(pt(0, 0), pt(2, 0), pt(1, 2)));
  CHECK(in_closed_diametral_disk(pt(0, 0), pt(2, 0), pt(1, 0)));   // collinear interior
  CHECK_THROWS_AS(in_closed_diametral_disk(pt(1, 1), pt(1, 1), pt(0, 0)), Error);
  CHECK_THROWS_AS(in_closed_diametral_disk(pt(0, 0), pt(2, 0), pt(2, 0)), Error);
  try {
    in_closed_diametral_disk(pt(1, 1), pt(1, 1), pt(0, 0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateEdge);
  }
  try {
    in_closed_diametral_disk(pt(0, 0), pt(2, 0), pt(0, 0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EndpointQuery);
  }
}

TEST_CASE("edge conflicts") {
  CHECK_FALSE(edges_conflict(pt(0, 0), pt(1, 0), pt(0, 1)));  // both gauges positive
  CHECK(edges_conflict(pt(0, 0), pt(1, 1), pt(1, 0)));        // boundary conflict
  CHECK(edges_conflict(pt(0, 0), pt(2, 0), pt(1, 0)));        // collinear containment
  CHECK_THROWS_AS(edges_conflict(pt(0, 0), pt(0, 0), pt(1, 0)), Error);
}

TEST_CASE("conflict is symmetric in the far endpoints") {
  std::mt19937_64 rng(11);
  auto coord = [&] { return Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1); };
  int checked = 0;
  while (checked < 500) {
    Point u = pt(coord(), coord()), v = pt(coord(), coord()), w = pt(coord(), coord());
    if (u == v || u == w || v == w) continue;
    CHECK(edges_conflict(u, v, w) == edges_conflict(u, w, v));
    ++checked;
  }
}

TEST_CASE("similarity invariance") {
  // translation, rotation with the 3-4-5 rational cos/sin pair, positive scaling
  Rational c(3, 5), s(4, 5);
  auto transform = [&](const Point& p) {
    Rational x = c * p.x - s * p.y, y = s * p.x + c * p.y;       // rotate
    return pt(x * Rational(7, 3) + Rational(11, 2), y * Rational(7, 3) - Rational(4));  // scale + translate
  };
  std::mt19937_64 rng(23);
  auto coord = [&] { return Rational(static_cast<long>(rng() % 31) - 15, static_cast<long>(rng() % 5) + 1); };
  int checked = 0;
  while (checked < 300) {
    Point u = pt(coord(), coord()), v = pt(coord(), coord()), w = pt(coord(), coord());
    if (u == v || u == w || v == w) continue;
    CHECK(edges_conflict(u, v, w) == edges_conflict(transform(u), transform(v), transform(w)));
    ++checked;
  }
}

TEST_CASE("radii of one circle never conflict at acute angles") {
  // rational points on the unit circle around u via t -> ((1-t^2)/(1+t^2), 2t/(1+t^2))
  Point u = pt(0, 0);
  auto on_circle = [&](long num, long den) {
    Rational t(num, den);
    Rational d = t * t + Rational(1);
    return pt((Rational(1) - t * t) / d, (t + t) / d);
  };
  // parameters t in (0, 1) stay within the first quadrant: pairwise central
  // angles below pi/2
  std::vector<Point> ring;
  for (long k = 1; k <= 9; ++k) ring.push_back(on_circle(k, 10));
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = i + 1; j < ring.size(); ++j) CHECK_FALSE(edges_conflict(u, ring[i], ring[j]));
}

TEST_CASE("gauge value ignores evaluation order") {
  std::mt19937_64 rng(5);
  auto coord = [&] { return Rational(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 17) + 1); };
  for (int i = 0; i < 200; ++i) {
    Point u = pt(coord(), coord()), v = pt(coord(), coord()), w = pt(coord(), coord());
    Rational direct = dot_gauge(u, v, w);
    Rational regrouped = (u.y - w.y) * (v.y - w.y) + (u.x - w.x) * (v.x - w.x);
    CHECK(direct == regrouped);
  }
}

TEST_SUITE_END();
