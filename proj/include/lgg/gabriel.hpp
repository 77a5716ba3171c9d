#pragma once

#include "lgg/graph.hpp"

namespace lgg {

/// Gabriel graph: edge (u,v) present iff the closed disk with diameter uv
/// contains no third point. Plain pair-vs-all scan; the serial reference.
GeometricGraph gabriel_graph(const PointSet& points);

/// Same graph via a grid-pruned candidate search, parallelized with OpenMP.
/// Exact: a certified cell-occupancy bound rules out all long edges, and
/// every surviving candidate is checked with the exact predicate. The grid
/// kernel needs small integer coordinates; other inputs fall back to the
/// reference scan. Output is identical to gabriel_graph on every input.
GeometricGraph gabriel_graph_fast(const PointSet& points);

}  // namespace lgg
