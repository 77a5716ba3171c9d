#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgg/cnf.hpp"
#include "lgg/graph.hpp"

namespace lgg {

/// Two-slanted-lines point set on which every LGG has large dilation.
/// n points on n/2 horizontal lines (two per line, numbered bottom line
/// first), lines 1/sqrt(n) apart, abscissae (i-1)/n and r-(i-1)/n on line i.
/// n must be an even perfect square >= 4 so that 1/sqrt(n) stays rational;
/// r defaults to its lower bound 1/(2n) + 3/2.
PointSet gen_ladder(std::size_t n, const std::optional<Rational>& r = std::nullopt);

/// The ladder plus one point per consecutive pair along each slanted line,
/// placed on the exterior side: midpoint offset perpendicularly outward by
/// half the pair's separation. Ladder points keep their indices; the n-2
/// extra points follow (left slant gaps bottom-up, then right).
PointSet gen_ladder_augmented(std::size_t n);

/// The witness LGG on the augmented ladder: detour edges through the added
/// points replacing the slant-chain edges, plus the horizontal rung on every
/// line. Passes verify_lgg and keeps dilation bounded while the Gabriel
/// graph on the same points does not.
GeometricGraph gen_ladder_augmented_lgg(std::size_t n);

/// Integer grid with all axis-aligned unit edges; unit distance graphs are
/// valid LGGs, which makes this the verifier stress generator.
GeometricGraph gen_unit_distance_grid(std::size_t rows, std::size_t cols);

struct Box {
  Rational x0, y0, x1, y1;
};

/// Deterministic-for-seed distinct points in the box (integer lattice when
/// the bounds are integers and the box is large enough, else a 2^20 lattice).
PointSet gen_random_points(std::size_t n, std::uint64_t seed, const std::optional<Box>& box = std::nullopt);

/// Hardness-reduction instance built from a formula: the embedded geometric
/// graph plus the bookkeeping needed to read solutions back.
struct ReductionInstance {
  GeometricGraph graph;
  int num_vars = 0;
  int num_clauses = 0;
  int z_per_var = 0;
  std::vector<std::pair<VertexId, VertexId>> literal_vertices;  // i -> (x_i, x'_i)
  std::vector<std::vector<VertexId>> variable_vertices;         // i -> z_{i,1..z_per_var}
  std::vector<VertexId> clause_vertices;                        // j -> c_j
  std::vector<EdgeId> e1;  // clause-to-literal edges, 3 per clause in clause order
  std::vector<EdgeId> e2;  // literal-to-variable edges; slot (i,j) holds
                           // (x_i,z_ij) at 2*(i*z_per_var+j), (x'_i,z_ij) next
  long target = 0;         // optimal edge count when satisfiable (3-SAT
                           // variant) resp. 5n + max satisfiable (MAX-(3,4))

  EdgeId e2_edge(int var, int slot, bool conjugate) const {
    return e2[2 * (static_cast<std::size_t>(var) * z_per_var + slot) + (conjugate ? 1 : 0)];
  }
};

/// 3-SAT reduction geometry: literal vertices 1e-5 apart on a vertical
/// line, clause vertices on an arc of radius n^4 spaced n/2, k+1 variable
/// vertices per variable on arcs of radius 10*n^4 spaced n/4. Satisfiable
/// formulas admit exactly (k+1)n+k edges, unsatisfiable ones fewer.
ReductionInstance gen_sat3_instance(const CnfFormula& f);

/// The MAX-(3,4)-SAT variant: exactly 5 variable vertices per variable, so
/// the optimum decomposes as 5n + (max satisfiable clauses).
ReductionInstance gen_max34_instance(const CnfFormula& f);

struct RemarkReport {
  bool conjugate_pairs_conflict = false;      // every (x_i,z), (x'_i,z) pair conflicts
  bool clause_edges_conflict = false;         // E1 edges at a clause vertex pairwise conflict
  bool variable_fan_clean = false;            // E2 edges at a literal pairwise compatible
  bool clause_fan_clean = false;              // E1 edges at a literal pairwise compatible
  bool variable_excludes_clause = false;      // E2 vs E1 at the same literal always conflicts

  bool all() const {
    return conjugate_pairs_conflict && clause_edges_conflict && variable_fan_clean && clause_fan_clean &&
           variable_excludes_clause;
  }
};

/// Direct predicate evaluation of the five structural properties every
/// reduction instance must satisfy.
RemarkReport check_remarks(const ReductionInstance& inst);

/// Rewrites a valid solution on a MAX-(3,4) instance so that all 5n
/// variable slots are used, never shrinking it (the local-improvement
/// normal form). Input and output are edge-index sets of inst.graph.
std::vector<EdgeId> normalize_apx_solution(const ReductionInstance& inst, const std::vector<EdgeId>& chosen);

}  // namespace lgg
