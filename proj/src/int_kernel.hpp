#pragma once

// Internal int64 specializations of the exact predicates, used by the
// parallel kernels when every coordinate is an integer small enough that no
// intermediate product can overflow. Results are bit-identical to the
// rational path; tests cross-check the two.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lgg/point.hpp"

namespace lgg::detail {

// |coordinate| <= 2^25 keeps dot products within 2^53 and the grid builder's
// chord comparisons within int64.
inline constexpr std::int64_t kMaxIntCoord = std::int64_t(1) << 25;

struct IntCoords {
  std::vector<std::array<std::int64_t, 2>> pts;
};

inline std::optional<IntCoords> extract_int_coords(const PointSet& ps, std::int64_t max_abs = kMaxIntCoord) {
  IntCoords out;
  out.pts.reserve(ps.size());
  for (const Point& p : ps) {
    std::int64_t x, y;
    if (!p.x.to_int64(x) || !p.y.to_int64(y)) return std::nullopt;
    if (x < -max_abs || x > max_abs || y < -max_abs || y > max_abs) return std::nullopt;
    out.pts.push_back({x, y});
  }
  return out;
}

inline std::int64_t dot_gauge_i(const std::array<std::int64_t, 2>& u, const std::array<std::int64_t, 2>& v,
                                const std::array<std::int64_t, 2>& w) {
  return (u[0] - w[0]) * (v[0] - w[0]) + (u[1] - w[1]) * (v[1] - w[1]);
}

inline bool edges_conflict_i(const std::array<std::int64_t, 2>& u, const std::array<std::int64_t, 2>& v,
                             const std::array<std::int64_t, 2>& w) {
  return dot_gauge_i(u, v, w) <= 0 || dot_gauge_i(u, w, v) <= 0;
}

// CCW-from-positive-x-axis ordering of direction vectors; same-ray ties by
// squared length.
inline int half_plane_i(std::int64_t dx, std::int64_t dy) {
  return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
}

inline bool angle_less_i(std::int64_t adx, std::int64_t ady, std::int64_t bdx, std::int64_t bdy) {
  int ha = half_plane_i(adx, ady), hb = half_plane_i(bdx, bdy);
  if (ha != hb) return ha < hb;
  std::int64_t cross = adx * bdy - ady * bdx;
  if (cross != 0) return cross > 0;
  return adx * adx + ady * ady < bdx * bdx + bdy * bdy;
}

}  // namespace lgg::detail
