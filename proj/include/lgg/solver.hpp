#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "lgg/conflict_graph.hpp"

namespace lgg {

struct SolveResult {
  std::vector<EdgeId> chosen;  // ascending edge indices, independent in the conflict graph
  Rational total_weight;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
};

/// Maximum-weight independent set by branch and bound: branch on a
/// maximum-degree node (include first), prune with a greedy clique-cover
/// upper bound, apply degree-0/1 reduction rules. Deterministic tie-breaking
/// (lowest index) throughout. If the time budget expires the best incumbent
/// is returned with optimal=false; that is a flagged result, not an error.
SolveResult max_glgg_exact(const ConflictGraph& cg,
                           std::optional<std::chrono::duration<double>> time_budget = std::nullopt);

/// Decision form: is there a GLGG of total weight at least m?
bool decide_glgg_at_least(const ConflictGraph& cg, const Rational& m,
                          std::optional<std::chrono::duration<double>> time_budget = std::nullopt);

/// Greedy: repeatedly take the best (max weight, then min conflict degree)
/// node and delete its neighborhood, then improve by 2-for-1 swaps until a
/// fixpoint. Deterministic for a given seed; always reports optimal=false.
SolveResult max_glgg_greedy(const ConflictGraph& cg, std::uint64_t seed = 0);

struct MaximalSets {
  std::vector<std::vector<EdgeId>> sets;  // each ascending
  bool truncated = false;
};

/// All maximal independent sets of the conflict graph (pivoting
/// enumeration), i.e. all maximal LGGs over the underlying edge universe.
/// Stops with truncated=true once cap sets have been emitted.
MaximalSets enumerate_maximal_lggs(const ConflictGraph& cg, std::size_t cap);

}  // namespace lgg
