#pragma once

#include "lgg/point.hpp"

namespace lgg {

/// Exact value of (u-w).(v-w). Its sign classifies the angle at w:
/// negative means angle uwv exceeds a right angle, zero means exactly a
/// right angle (w on the circle with diameter uv), positive means acute.
Rational dot_gauge(const Point& u, const Point& v, const Point& w);

/// True iff w lies in the closed disk with diameter uv, i.e. dot_gauge <= 0.
/// Throws DegenerateEdge when u == v, EndpointQuery when w is u or v.
bool in_closed_diametral_disk(const Point& u, const Point& v, const Point& w);

/// True iff the edges (u,v) and (u,w) sharing endpoint u conflict: one far
/// endpoint lies in the other edge's closed diametral disk. Symmetric in v, w.
/// Throws DegenerateEdge unless u, v, w are pairwise distinct.
bool edges_conflict(const Point& u, const Point& v, const Point& w);

}  // namespace lgg
