#include "lgg/verifier.hpp"

#include <algorithm>
#include <limits>

#include "int_kernel.hpp"
#include "lgg/predicates.hpp"

namespace lgg {

namespace {

int half_plane_q(const Rational& dx, const Rational& dy) {
  int sy = dy.sign();
  return (sy > 0 || (sy == 0 && dx.sign() > 0)) ? 0 : 1;
}

struct RayQ {
  Rational dx, dy;
  VertexId v;
};

bool angle_less_q(const RayQ& a, const RayQ& b) {
  int ha = half_plane_q(a.dx, a.dy), hb = half_plane_q(b.dx, b.dy);
  if (ha != hb) return ha < hb;
  Rational cross = a.dx * b.dy - a.dy * b.dx;
  int s = cross.sign();
  if (s != 0) return s > 0;
  return a.dx * a.dx + a.dy * a.dy < b.dx * b.dx + b.dy * b.dy;
}

std::vector<VertexId> sorted_ring_q(const GeometricGraph& g, VertexId u) {
  const Point& c = g.point(u);
  std::vector<RayQ> rays;
  rays.reserve(g.degree(u));
  for (VertexId v : g.neighbors(u)) rays.push_back(RayQ{g.point(v).x - c.x, g.point(v).y - c.y, v});
  std::sort(rays.begin(), rays.end(), angle_less_q);
  std::vector<VertexId> ring;
  ring.reserve(rays.size());
  for (const RayQ& r : rays) ring.push_back(r.v);
  return ring;
}

// First conflicting consecutive pair (by ring position) at u, or nullopt.
std::optional<Violation> vertex_violation_q(const GeometricGraph& g, VertexId u) {
  std::vector<VertexId> ring = sorted_ring_q(g, u);
  const std::size_t l = ring.size();
  if (l < 2) return std::nullopt;
  const std::size_t pairs = (l == 2) ? 1 : l;
  const Point& c = g.point(u);
  for (std::size_t i = 0; i < pairs; ++i) {
    VertexId v = ring[i], w = ring[(i + 1) % l];
    if (edges_conflict(c, g.point(v), g.point(w))) return Violation{u, v, w};
  }
  return std::nullopt;
}

struct IntRing {
  std::vector<VertexId> ring;
};

std::vector<VertexId> sorted_ring_i(const GeometricGraph& g, const detail::IntCoords& ic, VertexId u) {
  struct RayI {
    std::int64_t dx, dy;
    VertexId v;
  };
  const auto c = ic.pts[u];
  std::vector<RayI> rays;
  rays.reserve(g.degree(u));
  for (EdgeId e : g.incident_edges(u)) {
    VertexId v = g.edge(e).other(u);
    rays.push_back(RayI{ic.pts[v][0] - c[0], ic.pts[v][1] - c[1], v});
  }
  std::sort(rays.begin(), rays.end(),
            [](const RayI& a, const RayI& b) { return detail::angle_less_i(a.dx, a.dy, b.dx, b.dy); });
  std::vector<VertexId> ring;
  ring.reserve(rays.size());
  for (const RayI& r : rays) ring.push_back(r.v);
  return ring;
}

std::optional<Violation> vertex_violation_i(const GeometricGraph& g, const detail::IntCoords& ic, VertexId u) {
  std::vector<VertexId> ring = sorted_ring_i(g, ic, u);
  const std::size_t l = ring.size();
  if (l < 2) return std::nullopt;
  const std::size_t pairs = (l == 2) ? 1 : l;
  for (std::size_t i = 0; i < pairs; ++i) {
    VertexId v = ring[i], w = ring[(i + 1) % l];
    if (detail::edges_conflict_i(ic.pts[u], ic.pts[v], ic.pts[w])) return Violation{u, v, w};
  }
  return std::nullopt;
}

template <typename PerVertex>
VerifyResult scan_parallel(std::size_t n, PerVertex&& check) {
  // Per-vertex work is independent; the witness is the deterministic-scan
  // first violation, so reduce by smallest vertex id.
  VertexId best_u = std::numeric_limits<VertexId>::max();
  Violation best{};
#pragma omp parallel
  {
    VertexId local_u = std::numeric_limits<VertexId>::max();
    Violation local{};
#pragma omp for schedule(dynamic, 256) nowait
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      auto u = static_cast<VertexId>(i);
      if (u >= local_u) continue;
      if (auto vio = check(u); vio && u < local_u) {
        local_u = u;
        local = *vio;
      }
    }
#pragma omp critical
    {
      if (local_u < best_u) {
        best_u = local_u;
        best = local;
      }
    }
  }
  if (best_u == std::numeric_limits<VertexId>::max()) return VerifyResult{true, std::nullopt};
  return VerifyResult{false, best};
}

}  // namespace

AngularRing angular_ring(const GeometricGraph& g, VertexId u) {
  if (u >= g.vertex_count()) fail(ErrorKind::IndexOutOfRange, "angular_ring vertex out of range");
  return AngularRing{u, sorted_ring_q(g, u)};
}

VerifyResult verify_lgg_serial(const GeometricGraph& g) {
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    if (auto vio = vertex_violation_q(g, u)) return VerifyResult{false, vio};
  return VerifyResult{true, std::nullopt};
}

VerifyResult verify_lgg(const GeometricGraph& g) {
  if (auto ic = detail::extract_int_coords(g.points()))
    return scan_parallel(g.vertex_count(), [&](VertexId u) { return vertex_violation_i(g, *ic, u); });
  return scan_parallel(g.vertex_count(), [&](VertexId u) { return vertex_violation_q(g, u); });
}

std::vector<Violation> all_conflicting_pairs(const GeometricGraph& g) {
  std::vector<Violation> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    std::vector<VertexId> ring = sorted_ring_q(g, u);
    const Point& c = g.point(u);
    for (std::size_t i = 0; i < ring.size(); ++i)
      for (std::size_t j = i + 1; j < ring.size(); ++j)
        if (edges_conflict(c, g.point(ring[i]), g.point(ring[j]))) out.push_back(Violation{u, ring[i], ring[j]});
  }
  return out;
}

}  // namespace lgg
