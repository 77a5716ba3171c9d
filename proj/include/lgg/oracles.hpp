#pragma once

#include "lgg/cnf.hpp"
#include "lgg/conflict_graph.hpp"
#include "lgg/dilation.hpp"
#include "lgg/graph.hpp"

namespace lgg {
/// Independent brute-force references. Each one checks its defining
/// condition literally and exhaustively; they exist to arbitrate the fast
/// implementations, so they share no algorithmic structure with them.
/// Hard input-size caps raise TooLarge.
namespace oracles {

/// Literal check of the LGG condition: for every edge (u,v), no neighbor of
/// u or v may lie in the closed diametral disk of (u,v).
bool brute_force_lgg_valid(const GeometricGraph& g);

struct MwisResult {
  Rational weight;
  std::vector<EdgeId> chosen;
};

/// Exhaustive maximum over all independent subsets; |nodes| <= 24.
MwisResult brute_force_mwis(const ConflictGraph& cg);

struct SatResult {
  bool satisfiable = false;
  int max_satisfied = 0;
};

/// Exhaustive over all 2^n assignments; num_vars <= 20.
SatResult brute_force_sat(const CnfFormula& f);

/// Minimum global dilation over all valid LGG edge subsets of the complete
/// graph on `points`; |points| <= 7. Subsets are enumerated by incremental
/// extension with the literal validity check above (no conflict-graph or
/// ring machinery involved).
DilationValue brute_force_min_dilation(const PointSet& points, double max_width = 1e-9);

}  // namespace oracles
}  // namespace lgg
