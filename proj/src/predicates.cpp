#include "lgg/predicates.hpp"

#include <algorithm>

namespace lgg {

Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  // Sort a copy of the indices to detect duplicates in O(n log n).
  std::vector<const Point*> order;
  order.reserve(points_.size());
  for (const Point& p : points_) order.push_back(&p);
  std::sort(order.begin(), order.end(), [](const Point* a, const Point* b) { return *a < *b; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (*order[i - 1] == *order[i])
      fail(ErrorKind::DuplicatePoint, "point (" + order[i]->x.str() + ", " + order[i]->y.str() + ") occurs twice");
  }
}

Rational dot_gauge(const Point& u, const Point& v, const Point& w) {
  return (u.x - w.x) * (v.x - w.x) + (u.y - w.y) * (v.y - w.y);
}

bool in_closed_diametral_disk(const Point& u, const Point& v, const Point& w) {
  if (u == v) fail(ErrorKind::DegenerateEdge, "disk of a degenerate edge");
  if (w == u || w == v) fail(ErrorKind::EndpointQuery, "query point is an edge endpoint");
  return dot_gauge(u, v, w).sign() <= 0;
}

bool edges_conflict(const Point& u, const Point& v, const Point& w) {
  if (u == v || u == w || v == w) fail(ErrorKind::DegenerateEdge, "conflict test needs distinct points");
  return dot_gauge(u, v, w).sign() <= 0 || dot_gauge(u, w, v).sign() <= 0;
}

}  // namespace lgg
