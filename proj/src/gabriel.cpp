#include "lgg/gabriel.hpp"

#include <algorithm>
#include <cmath>

#include "int_kernel.hpp"
#include "lgg/predicates.hpp"

namespace lgg {

namespace {

std::vector<std::pair<VertexId, VertexId>> gabriel_pairs_reference(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  auto ic = detail::extract_int_coords(ps);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      bool open = true;
      if (ic) {
        for (VertexId w = 0; w < n && open; ++w)
          if (w != a && w != b && detail::dot_gauge_i(ic->pts[a], ic->pts[b], ic->pts[w]) <= 0) open = false;
      } else {
        for (VertexId w = 0; w < n && open; ++w)
          if (w != a && w != b && dot_gauge(ps[a], ps[b], ps[w]).sign() <= 0) open = false;
      }
      if (open) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

std::int64_t ceil_sqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r < v) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= v) --r;
  return r;
}

struct Grid {
  std::int64_t minx = 0, miny = 0, cell = 1;
  std::int64_t gx = 1, gy = 1;
  std::vector<std::vector<std::uint32_t>> buckets;

  std::int64_t cx(std::int64_t x) const { return (x - minx) / cell; }
  std::int64_t cy(std::int64_t y) const { return (y - miny) / cell; }
  const std::vector<std::uint32_t>& bucket(std::int64_t ix, std::int64_t iy) const {
    return buckets[static_cast<std::size_t>(iy) * gx + ix];
  }
};

// Builds an occupancy-certified grid: every cell inside the bounding box
// holds a point. Any pair further apart than 2*sqrt(2) cell sides then has a
// third point inside its diametral disk (the cell around the midpoint is
// nonempty and strictly interior to the disk), so only local candidates
// remain. Cell size doubles until the certificate holds; a single cell is
// always certified.
Grid build_certified_grid(const detail::IntCoords& ic, std::size_t n) {
  Grid g;
  g.minx = g.miny = std::numeric_limits<std::int64_t>::max();
  std::int64_t maxx = std::numeric_limits<std::int64_t>::min(), maxy = maxx;
  for (const auto& p : ic.pts) {
    g.minx = std::min(g.minx, p[0]);
    g.miny = std::min(g.miny, p[1]);
    maxx = std::max(maxx, p[0]);
    maxy = std::max(maxy, p[1]);
  }
  std::int64_t span = std::max({maxx - g.minx, maxy - g.miny, std::int64_t(1)});
  auto side_guess = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n) / 24.0));
  g.cell = std::max<std::int64_t>(1, span / std::max<std::int64_t>(1, side_guess));
  while (true) {
    g.gx = (maxx - g.minx) / g.cell + 1;
    g.gy = (maxy - g.miny) / g.cell + 1;
    g.buckets.assign(static_cast<std::size_t>(g.gx * g.gy), {});
    for (std::uint32_t i = 0; i < ic.pts.size(); ++i)
      g.buckets[static_cast<std::size_t>(g.cy(ic.pts[i][1])) * g.gx + g.cx(ic.pts[i][0])].push_back(i);
    bool certified = true;
    for (const auto& b : g.buckets)
      if (b.empty()) {
        certified = false;
        break;
      }
    if (certified || (g.gx == 1 && g.gy == 1)) return g;
    g.cell *= 2;
  }
}

std::vector<std::pair<VertexId, VertexId>> gabriel_pairs_grid(const detail::IntCoords& ic) {
  const std::size_t n = ic.pts.size();
  Grid grid = build_certified_grid(ic, n);
  const std::int64_t limit_sq = 8 * grid.cell * grid.cell;  // (2*sqrt(2)*cell)^2

  std::vector<std::vector<std::pair<VertexId, VertexId>>> found(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long ui = 0; ui < static_cast<long long>(n); ++ui) {
    auto u = static_cast<std::uint32_t>(ui);
    const auto pu = ic.pts[u];
    const std::int64_t ucx = grid.cx(pu[0]), ucy = grid.cy(pu[1]);
    for (std::int64_t ey = std::max<std::int64_t>(0, ucy - 3); ey <= std::min(grid.gy - 1, ucy + 3); ++ey) {
      for (std::int64_t ex = std::max<std::int64_t>(0, ucx - 3); ex <= std::min(grid.gx - 1, ucx + 3); ++ex) {
        for (std::uint32_t v : grid.bucket(ex, ey)) {
          if (v <= u) continue;
          const auto pv = ic.pts[v];
          const std::int64_t dx = pu[0] - pv[0], dy = pu[1] - pv[1];
          const std::int64_t d2 = dx * dx + dy * dy;
          if (d2 > limit_sq) continue;
          // Exact emptiness check over the cells covering the disk.
          const std::int64_t rad = ceil_sqrt(d2) / 2 + 1;
          const std::int64_t lox = std::min(pu[0], pv[0]) - rad, hix = std::max(pu[0], pv[0]) + rad;
          const std::int64_t loy = std::min(pu[1], pv[1]) - rad, hiy = std::max(pu[1], pv[1]) + rad;
          bool open = true;
          for (std::int64_t by = std::max<std::int64_t>(0, grid.cy(std::max(loy, grid.miny)));
               open && by <= std::min(grid.gy - 1, grid.cy(std::max(hiy, grid.miny))); ++by) {
            for (std::int64_t bx = std::max<std::int64_t>(0, grid.cx(std::max(lox, grid.minx)));
                 open && bx <= std::min(grid.gx - 1, grid.cx(std::max(hix, grid.minx))); ++bx) {
              for (std::uint32_t w : grid.bucket(bx, by)) {
                if (w == u || w == v) continue;
                if (detail::dot_gauge_i(pu, pv, ic.pts[w]) <= 0) {
                  open = false;
                  break;
                }
              }
            }
          }
          if (open) found[u].emplace_back(u, v);
        }
      }
    }
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (auto& f : found) pairs.insert(pairs.end(), f.begin(), f.end());
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

GeometricGraph gabriel_graph(const PointSet& points) {
  if (points.empty()) fail(ErrorKind::BadParameter, "gabriel graph needs at least one point");
  return build_graph(points, gabriel_pairs_reference(points));
}

GeometricGraph gabriel_graph_fast(const PointSet& points) {
  if (points.empty()) fail(ErrorKind::BadParameter, "gabriel graph needs at least one point");
  auto ic = detail::extract_int_coords(points);
  if (!ic) return build_graph(points, gabriel_pairs_reference(points));
  return build_graph(points, gabriel_pairs_grid(*ic));
}

}  // namespace lgg
