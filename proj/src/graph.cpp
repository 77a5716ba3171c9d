#include "lgg/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lgg {

GeometricGraph::GeometricGraph(PointSet points, std::vector<std::pair<VertexId, VertexId>> edge_pairs)
    : points_(std::move(points)) {
  const std::size_t n = points_.size();
  std::set<std::pair<VertexId, VertexId>> seen;
  edges_.reserve(edge_pairs.size());
  for (auto [a, b] : edge_pairs) {
    if (a >= n || b >= n)
      fail(ErrorKind::IndexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                           ") on " + std::to_string(n) + " vertices");
    if (a == b) fail(ErrorKind::SelfLoop, "edge (" + std::to_string(a) + "," + std::to_string(a) + ")");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      fail(ErrorKind::DuplicateEdge, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") occurs twice");
    edges_.push_back(Edge{a, b});
  }
  build_adjacency();
}

GeometricGraph::GeometricGraph(PointSet points, std::vector<Edge> edges)
    : points_(std::move(points)), edges_(std::move(edges)) {
  const std::size_t n = points_.size();
  std::set<std::pair<VertexId, VertexId>> seen;
  for (Edge& e : edges_) {
    if (e.a >= n || e.b >= n) fail(ErrorKind::IndexOutOfRange, "edge endpoint out of range");
    if (e.a == e.b) fail(ErrorKind::SelfLoop, "self loop");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.weight.sign() < 0) fail(ErrorKind::BadParameter, "negative edge weight");
    if (!seen.insert({e.a, e.b}).second) fail(ErrorKind::DuplicateEdge, "duplicate edge");
  }
  build_adjacency();
}

void GeometricGraph::build_adjacency() {
  adjacency_.assign(points_.size(), {});
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    adjacency_[edges_[i].a].push_back(i);
    adjacency_[edges_[i].b].push_back(i);
  }
}

void GeometricGraph::check_vertex(VertexId v) const {
  if (v >= points_.size())
    fail(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " on " + std::to_string(points_.size()) + " vertices");
}

const std::vector<EdgeId>& GeometricGraph::incident_edges(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::vector<VertexId> GeometricGraph::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  out.reserve(adjacency_[v].size());
  for (EdgeId e : adjacency_[v]) out.push_back(edges_[e].other(v));
  return out;
}

std::size_t GeometricGraph::degree(VertexId v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

GeometricGraph GeometricGraph::edge_subgraph(const std::vector<EdgeId>& keep) const {
  std::vector<Edge> sub;
  sub.reserve(keep.size());
  for (EdgeId e : keep) {
    if (e >= edges_.size()) fail(ErrorKind::IndexOutOfRange, "edge index out of range");
    sub.push_back(edges_[e]);
  }
  return GeometricGraph(points_, std::move(sub));
}

GeometricGraph build_graph(PointSet points, const std::vector<std::pair<VertexId, VertexId>>& edge_pairs) {
  return GeometricGraph(std::move(points), edge_pairs);
}

GeometricGraph complete_graph(PointSet points) {
  if (points.empty()) fail(ErrorKind::BadParameter, "complete graph needs at least one point");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const std::size_t n = points.size();
  pairs.reserve(n * (n - 1) / 2);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return GeometricGraph(std::move(points), std::move(pairs));
}

}  // namespace lgg
