#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lgg/graph.hpp"
#include "lgg/interval.hpp"

namespace lgg {

/// Either a finite enclosure of a stretch value or infinity (disconnected).
struct DilationValue {
  bool infinite = false;
  Interval value;  // meaningful only when finite

  bool is_finite() const { return !infinite; }
};

struct DilationReport {
  DilationValue global;
  std::pair<VertexId, VertexId> witness_pair{0, 0};
  /// Row-major n*n matrix of per-pair values when requested (diagonal
  /// entries are finite [0,0] placeholders).
  std::vector<DilationValue> per_pair;
  std::size_t vertex_count = 0;

  const DilationValue& pair(VertexId u, VertexId v) const { return per_pair[u * vertex_count + v]; }
};

/// Stretch factor of g: max over vertex pairs of shortest-path length over
/// Euclidean distance. Path lengths are sums of square roots, so every
/// quantity is evaluated twice with directed rounding (lower and upper
/// Dijkstra passes); the result interval is guaranteed to contain the exact
/// value, with width at most `max_width` (precision escalates until then).
/// Disconnected graphs give an infinite global value with a witness pair
/// taken from different components. Throws TooFewVertices when |V| < 2.
DilationReport dilation(const GeometricGraph& g, bool with_matrix = false, double max_width = 1e-9);

/// Single-pair stretch. Throws IndexOutOfRange / SamePair.
DilationValue dilation_pair(const GeometricGraph& g, VertexId u, VertexId v, double max_width = 1e-9);

struct MinDilationOptions {
  std::size_t cap = 100000;        // bound on maximal-LGG enumeration
  std::size_t max_points = 12;     // small-n guard
  double max_width = 1e-9;
};

struct MinDilationResult {
  GeometricGraph best;
  DilationValue dilation;
  bool truncated = false;        // enumeration hit the cap
  std::size_t candidates = 0;    // maximal LGGs examined
};

/// Minimum-dilation LGG over the complete candidate set on `points`,
/// found by exhausting maximal LGGs (adding a conflict-free edge never
/// increases dilation, so some maximal LGG attains the minimum). Ties are
/// broken toward the lexicographically smallest edge set.
/// Throws TooManyPoints beyond opts.max_points.
MinDilationResult min_dilation_lgg(const PointSet& points, const MinDilationOptions& opts = {});

/// True iff the minimum dilation over LGGs on `points` is at most k
/// (interval lower bound compared against k); nullopt k means +infinity.
bool decision_dilation(const PointSet& points, const std::optional<Rational>& k,
                       const MinDilationOptions& opts = {});

}  // namespace lgg
