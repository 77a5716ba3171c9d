#include "lgg/conflict_graph.hpp"

#include <algorithm>
#include <map>

namespace lgg {

ConflictGraph::ConflictGraph(std::size_t nodes, std::vector<std::pair<EdgeId, EdgeId>> arcs,
                             std::vector<Rational> weights)
    : arcs_(std::move(arcs)), weights_(std::move(weights)) {
  if (weights_.size() != nodes) fail(ErrorKind::BadParameter, "weight count does not match node count");
  for (const Rational& w : weights_)
    if (w.sign() < 0) fail(ErrorKind::BadParameter, "negative node weight");
  for (auto& [a, b] : arcs_) {
    if (a >= nodes || b >= nodes) fail(ErrorKind::IndexOutOfRange, "arc endpoint out of range");
    if (a == b) fail(ErrorKind::SelfLoop, "arc from a node to itself");
    if (a > b) std::swap(a, b);
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  adjacency_.assign(nodes, {});
  for (auto [a, b] : arcs_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool ConflictGraph::adjacent(EdgeId a, EdgeId b) const {
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool ConflictGraph::is_independent(const std::vector<EdgeId>& chosen) const {
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      if (adjacent(chosen[i], chosen[j])) return false;
  return true;
}

ConflictGraph build_conflict_graph(const GeometricGraph& g) {
  std::map<std::pair<VertexId, VertexId>, EdgeId> lookup;
  for (EdgeId e = 0; e < g.edge_count(); ++e) lookup[{g.edge(e).a, g.edge(e).b}] = e;
  auto edge_of = [&](VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return lookup.at({a, b});
  };
  std::vector<std::pair<EdgeId, EdgeId>> arcs;
  for (const Violation& vio : all_conflicting_pairs(g))
    arcs.emplace_back(edge_of(vio.shared, vio.first), edge_of(vio.shared, vio.second));
  std::vector<Rational> weights;
  weights.reserve(g.edge_count());
  for (const Edge& e : g.edges()) weights.push_back(e.weight);
  return ConflictGraph(g.edge_count(), std::move(arcs), std::move(weights));
}

}  // namespace lgg
