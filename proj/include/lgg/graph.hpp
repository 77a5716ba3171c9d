#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lgg/point.hpp"

namespace lgg {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Undirected edge, stored with a < b. Weight defaults to 1; it carries the
/// maximum-weight variant of the edge-selection problems.
struct Edge {
  VertexId a;
  VertexId b;
  Rational weight = Rational(1);

  VertexId other(VertexId v) const { return v == a ? b : a; }
};

/// Embedded undirected graph over an exact point set. Immutable after build;
/// edge indices are stable for the graph's lifetime.
class GeometricGraph {
 public:
  GeometricGraph() = default;
  GeometricGraph(PointSet points, std::vector<std::pair<VertexId, VertexId>> edge_pairs);
  GeometricGraph(PointSet points, std::vector<Edge> edges);

  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const PointSet& points() const { return points_; }
  const Point& point(VertexId v) const { return points_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  /// Indices of the edges incident to v.
  const std::vector<EdgeId>& incident_edges(VertexId v) const;

  /// All vertices adjacent to v, no duplicates. Throws IndexOutOfRange.
  std::vector<VertexId> neighbors(VertexId v) const;

  std::size_t degree(VertexId v) const;

  /// Subgraph on the same point set keeping only the given edges.
  GeometricGraph edge_subgraph(const std::vector<EdgeId>& keep) const;

 private:
  void build_adjacency();
  void check_vertex(VertexId v) const;

  PointSet points_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
};

/// Canonicalizes, validates, and builds adjacency. Duplicate edges, self
/// loops, and out-of-range indices are errors, never silently merged.
GeometricGraph build_graph(PointSet points, const std::vector<std::pair<VertexId, VertexId>>& edge_pairs);

/// The graph with all n(n-1)/2 edges; universe for LGG optimization on a
/// bare point set.
GeometricGraph complete_graph(PointSet points);

}  // namespace lgg
