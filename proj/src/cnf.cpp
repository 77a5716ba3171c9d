#include "lgg/cnf.hpp"

#include <sstream>
#include <string>

namespace lgg {

void CnfFormula::check_shape() const {
  if (num_vars <= 0) fail(ErrorKind::ShapeError, "formula needs at least one variable");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& cl = clauses[c];
    for (int i = 0; i < 3; ++i) {
      if (cl[i].var < 0 || cl[i].var >= num_vars)
        fail(ErrorKind::ShapeError, "clause " + std::to_string(c + 1) + " uses variable out of range");
      for (int j = i + 1; j < 3; ++j)
        if (cl[i].var == cl[j].var)
          fail(ErrorKind::ShapeError, "clause " + std::to_string(c + 1) + " repeats a variable");
    }
  }
}

void CnfFormula::check_max34_shape() const {
  check_shape();
  std::vector<int> occurrences(num_vars, 0);
  for (const auto& cl : clauses)
    for (const Literal& lit : cl) ++occurrences[lit.var];
  for (int v = 0; v < num_vars; ++v)
    if (occurrences[v] != 4)
      fail(ErrorKind::ShapeError,
           "variable " + std::to_string(v + 1) + " occurs " + std::to_string(occurrences[v]) + " times, want 4");
}

CnfFormula parse_dimacs(std::string_view text, bool require_max34) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula f;
  int declared_clauses = -1;
  std::vector<int> current;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
        fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad problem line");
      if (f.num_vars <= 0 || declared_clauses < 0)
        fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad problem counts");
      continue;
    }
    if (declared_clauses < 0) fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": clause before problem line");
    ls.clear();
    ls.str(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (current.size() != 3)
          fail(ErrorKind::ShapeError, "line " + std::to_string(line_no) + ": clause with " +
                                          std::to_string(current.size()) + " literals, want 3");
        std::array<Literal, 3> cl;
        for (int i = 0; i < 3; ++i) cl[i] = Literal{std::abs(current[i]) - 1, current[i] < 0};
        f.clauses.push_back(cl);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
    if (ls.fail() && !ls.eof()) fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad literal");
  }
  if (!current.empty()) fail(ErrorKind::ParseError, "unterminated clause at end of input");
  if (declared_clauses < 0) fail(ErrorKind::ParseError, "missing problem line");
  if (f.clause_count() != declared_clauses)
    fail(ErrorKind::ParseError, "problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                                    std::to_string(f.clause_count()));
  if (require_max34)
    f.check_max34_shape();
  else
    f.check_shape();
  return f;
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << " " << f.clause_count() << "\n";
  for (const auto& cl : f.clauses) {
    for (const Literal& lit : cl) out << (lit.negated ? -(lit.var + 1) : lit.var + 1) << " ";
    out << "0\n";
  }
  return out.str();
}

}  // namespace lgg
