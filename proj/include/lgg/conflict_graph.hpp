#pragma once

#include <utility>
#include <vector>

#include "lgg/graph.hpp"
#include "lgg/verifier.hpp"

namespace lgg {

/// Graph whose nodes are the edges of a geometric graph and whose arcs join
/// conflicting pairs. GLGG edge sets are exactly its independent sets. Arcs
/// only ever join two edges sharing an endpoint.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  ConflictGraph(std::size_t nodes, std::vector<std::pair<EdgeId, EdgeId>> arcs, std::vector<Rational> weights);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<std::pair<EdgeId, EdgeId>>& arcs() const { return arcs_; }
  const std::vector<EdgeId>& neighbors(EdgeId node) const { return adjacency_[node]; }
  std::size_t degree(EdgeId node) const { return adjacency_[node].size(); }
  const Rational& weight(EdgeId node) const { return weights_[node]; }
  const std::vector<Rational>& weights() const { return weights_; }

  bool adjacent(EdgeId a, EdgeId b) const;

  /// True iff no two chosen nodes are joined by an arc.
  bool is_independent(const std::vector<EdgeId>& chosen) const;

 private:
  std::vector<std::pair<EdgeId, EdgeId>> arcs_;
  std::vector<std::vector<EdgeId>> adjacency_;
  std::vector<Rational> weights_;
};

/// Nodes are all edges of g, arcs come from all_conflicting_pairs, weights
/// are copied from the edges (default 1).
ConflictGraph build_conflict_graph(const GeometricGraph& g);

}  // namespace lgg
