#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "lgg/error.hpp"

namespace lgg {

/// A literal over variable index 0..num_vars-1.
struct Literal {
  int var = 0;
  bool negated = false;
};

/// 3-SAT shape: every clause has exactly 3 literals over distinct variables.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }

  /// Throws ShapeError unless the 3-SAT shape invariants hold.
  void check_shape() const;

  /// Additionally requires every variable to occur in exactly four clauses
  /// (the MAX-(3,4)-SAT restriction, which forces 3k = 4n).
  void check_max34_shape() const;
};

/// DIMACS CNF ("p cnf <vars> <clauses>", clauses terminated by 0). Clauses
/// must have exactly 3 literals over distinct variables. With require_max34,
/// the four-occurrences rule is enforced as well.
CnfFormula parse_dimacs(std::string_view text, bool require_max34 = false);

/// DIMACS serialization of a formula.
std::string emit_dimacs(const CnfFormula& f);

}  // namespace lgg
