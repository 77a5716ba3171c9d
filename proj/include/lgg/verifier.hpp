#pragma once

#include <optional>
#include <vector>

#include "lgg/graph.hpp"

namespace lgg {

/// Neighbors of a vertex sorted counterclockwise by angle from the positive
/// x-axis, ties on a common ray broken by increasing distance. The stored
/// rotation is canonical: position 0 holds the smallest angle.
struct AngularRing {
  VertexId center = 0;
  std::vector<VertexId> ring;
};

/// A pair of incident conflicting edges (shared,first) and (shared,second).
struct Violation {
  VertexId shared;
  VertexId first;
  VertexId second;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.shared == b.shared && a.first == b.first && a.second == b.second;
  }
};

struct VerifyResult {
  bool valid = true;
  std::optional<Violation> witness;
};

/// Exact angular sort of the neighbors of u; no trigonometry, only
/// half-plane classification and cross-product signs.
AngularRing angular_ring(const GeometricGraph& g, VertexId u);

/// Decides whether g is a valid LGG by checking, at every vertex, each pair
/// of consecutive neighbors in the angular ring (wrap-around included; a
/// ring of size 2 is checked once). The witness, when present, is the first
/// violation in scan order: ascending vertex, then ring position.
///
/// Runs the parallel kernel (and an overflow-checked int64 fast path for
/// small integer coordinates). verify_lgg_serial is the plain
/// exact-rational reference; both always return identical results.
VerifyResult verify_lgg(const GeometricGraph& g);
VerifyResult verify_lgg_serial(const GeometricGraph& g);

/// Every conflicting pair of incident edges: for each vertex u, each
/// unordered pair {v,w} of neighbors that conflicts, reported once with v
/// before w in ring order.
std::vector<Violation> all_conflicting_pairs(const GeometricGraph& g);

}  // namespace lgg
