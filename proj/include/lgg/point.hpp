#pragma once

#include <vector>

#include "lgg/rational.hpp"

namespace lgg {

/// Exact planar point.
struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic; used for canonical ordering and duplicate detection.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Exact squared Euclidean distance.
Rational squared_distance(const Point& a, const Point& b);

/// Ordered sequence of pairwise distinct points, indexed 0..n-1.
class PointSet {
 public:
  PointSet() = default;
  /// Throws DuplicatePoint when two points coincide.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
};

}  // namespace lgg
