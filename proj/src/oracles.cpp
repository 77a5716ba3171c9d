#include "lgg/oracles.hpp"

#include <algorithm>

#include "lgg/predicates.hpp"

namespace lgg::oracles {

bool brute_force_lgg_valid(const GeometricGraph& g) {
  for (const Edge& e : g.edges()) {
    const Point& pu = g.point(e.a);
    const Point& pv = g.point(e.b);
    for (VertexId side : {e.a, e.b}) {
      for (VertexId w : g.neighbors(side)) {
        if (w == e.a || w == e.b) continue;
        if (in_closed_diametral_disk(pu, pv, g.point(w))) return false;
      }
    }
  }
  return true;
}

namespace {

bool scale_to_int64(const std::vector<Rational>& w, std::vector<std::int64_t>& out) {
  mpz_class lcm = 1;
  for (const Rational& r : w) {
    mpz_class den = r.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    if (mpz_sizeinbase(lcm.get_mpz_t(), 2) > 32) return false;
  }
  out.clear();
  mpz_class total = 0;
  for (const Rational& r : w) {
    mpz_class s = r.numerator() * (lcm / r.denominator());
    if (!s.fits_slong_p()) return false;
    total += s;
    out.push_back(s.get_si());
  }
  return total.fits_slong_p();
}

template <typename W>
struct MwisSearch {
  const ConflictGraph& cg;
  const std::vector<W>& w;
  std::vector<EdgeId> current, best;
  W current_w{}, best_w{};
  bool any = false;

  void rec(std::size_t i) {
    if (i == cg.node_count()) {
      if (!any || current_w > best_w) {
        any = true;
        best_w = current_w;
        best = current;
      }
      return;
    }
    bool free = true;
    for (EdgeId c : current)
      if (cg.adjacent(c, i)) {
        free = false;
        break;
      }
    if (free) {
      current.push_back(i);
      current_w += w[i];
      rec(i + 1);
      current.pop_back();
      current_w -= w[i];
    }
    rec(i + 1);
  }
};

}  // namespace

MwisResult brute_force_mwis(const ConflictGraph& cg) {
  if (cg.node_count() > 24)
    fail(ErrorKind::TooLarge, "brute-force MWIS capped at 24 nodes, got " + std::to_string(cg.node_count()));
  std::vector<std::int64_t> iw;
  std::vector<EdgeId> best;
  if (scale_to_int64(cg.weights(), iw)) {
    MwisSearch<std::int64_t> s{cg, iw};
    s.rec(0);
    best = std::move(s.best);
  } else {
    MwisSearch<Rational> s{cg, cg.weights()};
    s.rec(0);
    best = std::move(s.best);
  }
  MwisResult r;
  r.chosen = std::move(best);
  for (EdgeId e : r.chosen) r.weight += cg.weight(e);
  return r;
}

SatResult brute_force_sat(const CnfFormula& f) {
  f.check_shape();
  if (f.num_vars > 20)
    fail(ErrorKind::TooLarge, "brute-force SAT capped at 20 variables, got " + std::to_string(f.num_vars));
  SatResult r;
  const std::uint32_t limit = std::uint32_t(1) << f.num_vars;
  for (std::uint32_t assignment = 0; assignment < limit; ++assignment) {
    int satisfied = 0;
    for (const auto& cl : f.clauses) {
      bool sat = false;
      for (const Literal& lit : cl) {
        bool value = (assignment >> lit.var) & 1;
        if (value != lit.negated) {
          sat = true;
          break;
        }
      }
      satisfied += sat;
    }
    if (satisfied > r.max_satisfied) r.max_satisfied = satisfied;
  }
  r.satisfiable = r.max_satisfied == f.clause_count();
  if (f.clauses.empty()) r.satisfiable = true;
  return r;
}

namespace {

// Enumerates valid LGG subsets of the complete graph edge by edge, pruning
// include branches as soon as the literal validity condition breaks (more
// edges only add constraints). Evaluates dilation on subsets that are
// maximal within the valid family.
struct MinDilationSearch {
  const GeometricGraph& universe;
  double max_width;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj;  // vertex -> (other, edge)
  std::vector<EdgeId> current;
  bool any_finite = false;
  Real min_lo, min_hi;

  explicit MinDilationSearch(const GeometricGraph& u, double mw)
      : universe(u), max_width(mw), adj(u.vertex_count()) {}

  // Would adding edge e keep the subset a valid LGG (checked literally)?
  bool addition_ok(EdgeId e) const {
    const Edge& ed = universe.edge(e);
    const Point& pa = universe.point(ed.a);
    const Point& pb = universe.point(ed.b);
    for (auto [w, we] : adj[ed.a]) {
      if (w == ed.b) continue;
      // w is a neighbor of a: it must avoid disk(a,b), and b (a's new
      // neighbor) must avoid disk(a,w).
      if (in_closed_diametral_disk(pa, pb, universe.point(w))) return false;
      if (in_closed_diametral_disk(pa, universe.point(w), pb)) return false;
    }
    for (auto [w, we] : adj[ed.b]) {
      if (w == ed.a) continue;
      if (in_closed_diametral_disk(pa, pb, universe.point(w))) return false;
      if (in_closed_diametral_disk(pb, universe.point(w), pa)) return false;
    }
    return true;
  }

  void push_edge(EdgeId e) {
    const Edge& ed = universe.edge(e);
    adj[ed.a].push_back({ed.b, e});
    adj[ed.b].push_back({ed.a, e});
    current.push_back(e);
  }
  void pop_edge(EdgeId e) {
    const Edge& ed = universe.edge(e);
    adj[ed.a].pop_back();
    adj[ed.b].pop_back();
    current.pop_back();
  }

  void leaf() {
    for (EdgeId e = 0; e < universe.edge_count(); ++e) {
      if (std::find(current.begin(), current.end(), e) != current.end()) continue;
      if (addition_ok(e)) return;  // extendable, not maximal
    }
    DilationReport rep = dilation(universe.edge_subgraph(current), false, max_width);
    if (rep.global.infinite) return;
    if (!any_finite) {
      any_finite = true;
      min_lo = rep.global.value.lo;
      min_hi = rep.global.value.hi;
      return;
    }
    if (rep.global.value.lo.cmp(min_lo) < 0) min_lo = rep.global.value.lo;
    if (rep.global.value.hi.cmp(min_hi) < 0) min_hi = rep.global.value.hi;
  }

  void rec(EdgeId i) {
    if (i == universe.edge_count()) {
      leaf();
      return;
    }
    if (addition_ok(i)) {
      push_edge(i);
      rec(i + 1);
      pop_edge(i);
    }
    rec(i + 1);
  }
};

}  // namespace

DilationValue brute_force_min_dilation(const PointSet& points, double max_width) {
  if (points.size() > 7)
    fail(ErrorKind::TooLarge, "brute-force minimum dilation capped at 7 points, got " + std::to_string(points.size()));
  if (points.size() < 2) fail(ErrorKind::TooFewVertices, "need at least two points");
  GeometricGraph universe = complete_graph(points);
  MinDilationSearch search(universe, max_width);
  search.rec(0);
  if (!search.any_finite) return DilationValue{true, {}};
  return DilationValue{false, Interval{search.min_lo, search.min_hi}};
}

}  // namespace lgg::oracles
