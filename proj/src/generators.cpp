#include "lgg/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lgg/oracles.hpp"
#include "lgg/predicates.hpp"

namespace lgg {

namespace {

std::size_t exact_sqrt(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

void check_ladder_n(std::size_t n) {
  if (n < 4 || n % 2 != 0) fail(ErrorKind::BadParameter, "ladder size must be even and at least 4");
  if (exact_sqrt(n) == 0)
    fail(ErrorKind::BadParameter, "ladder size must be a perfect square so that 1/sqrt(n) is rational");
}

}  // namespace

PointSet gen_ladder(std::size_t n, const std::optional<Rational>& r) {
  check_ladder_n(n);
  const long nn = static_cast<long>(n);
  const long root = static_cast<long>(exact_sqrt(n));
  const Rational bound = Rational(1, 2 * nn) + Rational(3, 2);
  Rational width = r.value_or(bound);
  if (width < bound)
    fail(ErrorKind::BadParameter, "ladder width " + width.str() + " below the bound " + bound.str());
  const Rational gap(1, root);  // vertical line separation 1/sqrt(n)
  std::vector<Point> pts;
  pts.reserve(n);
  for (long i = 1; i <= nn / 2; ++i) {
    Rational shift(i - 1, nn);
    Rational y = Rational(i - 1) * gap;
    pts.push_back(Point{shift, y});          // p_{2i-1}
    pts.push_back(Point{width - shift, y});  // p_{2i}
  }
  return PointSet(std::move(pts));
}

namespace {

// Exterior offset point for a slant gap from a to b (b one line above):
// midpoint displaced by half the separation, away from the ladder's middle.
Point exterior_point(const Point& a, const Point& b, bool left_slant) {
  Rational dx = b.x - a.x, dy = b.y - a.y;
  Rational mx = (a.x + b.x) / 2, my = (a.y + b.y) / 2;
  if (left_slant) return Point{mx - dy / 2, my + dx / 2};
  return Point{mx + dy / 2, my - dx / 2};
}

}  // namespace

PointSet gen_ladder_augmented(std::size_t n) {
  PointSet base = gen_ladder(n);
  std::vector<Point> pts(base.begin(), base.end());
  const std::size_t lines = n / 2;
  for (std::size_t i = 0; i + 1 < lines; ++i)  // left slant: indices 2i
    pts.push_back(exterior_point(base[2 * i], base[2 * (i + 1)], true));
  for (std::size_t i = 0; i + 1 < lines; ++i)  // right slant: indices 2i+1
    pts.push_back(exterior_point(base[2 * i + 1], base[2 * (i + 1) + 1], false));
  return PointSet(std::move(pts));
}

GeometricGraph gen_ladder_augmented_lgg(std::size_t n) {
  PointSet pts = gen_ladder_augmented(n);
  const std::size_t lines = n / 2;
  const std::size_t gaps = lines - 1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < gaps; ++i) {  // left detours
    VertexId w = n + i;
    edges.emplace_back(2 * i, w);
    edges.emplace_back(w, 2 * (i + 1));
  }
  for (std::size_t i = 0; i < gaps; ++i) {  // right detours
    VertexId w = n + gaps + i;
    edges.emplace_back(2 * i + 1, w);
    edges.emplace_back(w, 2 * (i + 1) + 1);
  }
  for (std::size_t i = 0; i < lines; ++i) edges.emplace_back(2 * i, 2 * i + 1);  // rungs
  return build_graph(std::move(pts), edges);
}

GeometricGraph gen_unit_distance_grid(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) fail(ErrorKind::BadParameter, "grid needs at least one row and one column");
  std::vector<Point> pts;
  pts.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) pts.push_back(Point{Rational(static_cast<long>(c)), Rational(static_cast<long>(r))});
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return build_graph(PointSet(std::move(pts)), edges);
}

PointSet gen_random_points(std::size_t n, std::uint64_t seed, const std::optional<Box>& box) {
  if (n < 1) fail(ErrorKind::BadParameter, "need at least one point");
  Box b = box.value_or(Box{Rational(0), Rational(0), Rational(1000000), Rational(1000000)});
  if (!(b.x0 < b.x1) || !(b.y0 < b.y1)) fail(ErrorKind::BadParameter, "empty bounding box");

  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::uint64_t range) {  // uniform in [0, range], rejection sampled
    std::uint64_t mask = ~std::uint64_t(0);
    if (range < mask) {
      mask = 1;
      while (mask <= range) mask = (mask << 1) | 1;
    }
    while (true) {
      std::uint64_t v = rng() & mask;
      if (v <= range) return v;
    }
  };

  std::int64_t ix0 = 0, iy0 = 0, ix1 = 0, iy1 = 0;
  bool integer_mode = b.x0.to_int64(ix0) && b.y0.to_int64(iy0) && b.x1.to_int64(ix1) && b.y1.to_int64(iy1);
  if (integer_mode) {
    // The lattice must comfortably fit n distinct points.
    double cells = static_cast<double>(ix1 - ix0 + 1) * static_cast<double>(iy1 - iy0 + 1);
    if (cells < 4.0 * static_cast<double>(n)) integer_mode = false;
  }

  std::set<Point> used;
  std::vector<Point> pts;
  const std::uint64_t lattice = std::uint64_t(1) << 20;
  Rational spanx = b.x1 - b.x0, spany = b.y1 - b.y0;
  while (pts.size() < n) {
    Point p;
    if (integer_mode) {
      p.x = Rational(static_cast<long>(ix0 + static_cast<std::int64_t>(draw(ix1 - ix0))));
      p.y = Rational(static_cast<long>(iy0 + static_cast<std::int64_t>(draw(iy1 - iy0))));
    } else {
      p.x = b.x0 + spanx * Rational(static_cast<long>(draw(lattice)), static_cast<long>(lattice));
      p.y = b.y0 + spany * Rational(static_cast<long>(draw(lattice)), static_cast<long>(lattice));
    }
    if (used.insert(p).second) pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

namespace {

mpz_class pow4(long n) {
  mpz_class v(n);
  return v * v * v * v;
}

// Rounds q to the nearest multiple of 1/den; keeps arc parameters small.
Rational round_to_denominator(const Rational& q, long den) {
  mpz_class num = q.numerator() * den * 2 + q.denominator();
  mpz_class d = q.denominator() * 2;
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
  return Rational(r, mpz_class(den));
}

// Points on the circle of the given radius via the Pythagorean
// parameterization t -> r*((1-t^2)/(1+t^2), 2t/(1+t^2)); exact rational
// points, chord spacing controlled within the construction's 1% slack.
std::vector<Point> arc_points(const Point& center, const Rational& radius, const Rational& chord, int count) {
  // First point roughly one unit above the horizontal through the center,
  // then steps of chord/(2r) corrected by (1+t^2) to hold the chord length.
  Rational t = Rational(1) / (radius * 2);
  Rational step = chord / (radius * 2);
  std::vector<Point> out;
  std::optional<Point> prev;
  for (int j = 0; j < count; ++j) {
    Rational t2 = t * t;
    Rational denom = t2 + 1;
    Point p{center.x + radius * (Rational(1) - t2) / denom, center.y + radius * (t + t) / denom};
    if (prev) {
      Rational ratio = squared_distance(*prev, p) / (chord * chord);
      if (ratio < Rational(9801, 10000) || ratio > Rational(10201, 10000))
        fail(ErrorKind::BadParameter, "arc chord spacing drifted outside the 1% tolerance");
    }
    prev = p;
    out.push_back(std::move(p));
    t = round_to_denominator(t + step * (t2 + 1), 1000000000L);
  }
  return out;
}

ReductionInstance build_reduction(const CnfFormula& f, int z_per_var, long target) {
  const long n = f.num_vars;
  const long k = f.clause_count();
  const Rational spacing(1, 100000);

  ReductionInstance inst;
  inst.num_vars = static_cast<int>(n);
  inst.num_clauses = static_cast<int>(k);
  inst.z_per_var = z_per_var;
  inst.target = target;

  // Literal vertices top-down on the vertical line through the origin; the
  // origin is the center of the whole stack. x_i sits directly above x'_i.
  std::vector<Point> pts;
  for (long t = 0; t < 2 * n; ++t) pts.push_back(Point{Rational(0), Rational(2 * n - 1 - 2 * t) * spacing / 2});
  for (long i = 0; i < n; ++i)
    inst.literal_vertices.emplace_back(static_cast<VertexId>(2 * i), static_cast<VertexId>(2 * i + 1));

  const Rational d1(pow4(n), mpz_class(1));
  const Rational d2 = d1 * 10;

  // Variable vertices: per variable an arc of radius d2 centered between the
  // conjugate pair, chords n/4 apart, all above the pair's band.
  inst.variable_vertices.resize(n);
  for (long i = 0; i < n; ++i) {
    Point center{Rational(0), Rational(n - 1 - 2 * i) * spacing};
    for (Point& p : arc_points(center, d2, Rational(n, 4), z_per_var)) {
      inst.variable_vertices[i].push_back(pts.size());
      pts.push_back(std::move(p));
    }
  }

  // Clause vertices: one arc of radius d1 centered at the stack center,
  // chords n/2 apart, entirely above the top literal line.
  for (Point& p : arc_points(Point{Rational(0), Rational(0)}, d1, Rational(n, 2), static_cast<int>(k))) {
    inst.clause_vertices.push_back(pts.size());
    pts.push_back(std::move(p));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (long j = 0; j < k; ++j) {
    for (const Literal& lit : f.clauses[j]) {
      auto [pos, neg] = inst.literal_vertices[lit.var];
      edges.emplace_back(inst.clause_vertices[j], lit.negated ? neg : pos);
    }
  }
  const std::size_t e1_count = edges.size();
  for (long i = 0; i < n; ++i) {
    auto [pos, neg] = inst.literal_vertices[i];
    for (int j = 0; j < z_per_var; ++j) {
      edges.emplace_back(pos, inst.variable_vertices[i][j]);
      edges.emplace_back(neg, inst.variable_vertices[i][j]);
    }
  }
  inst.graph = build_graph(PointSet(std::move(pts)), edges);
  for (EdgeId e = 0; e < e1_count; ++e) inst.e1.push_back(e);
  for (EdgeId e = e1_count; e < inst.graph.edge_count(); ++e) inst.e2.push_back(e);
  return inst;
}

}  // namespace

ReductionInstance gen_sat3_instance(const CnfFormula& f) {
  try {
    f.check_shape();
  } catch (const Error& e) {
    fail(ErrorKind::BadFormula, e.what());
  }
  const long n = f.num_vars, k = f.clause_count();
  return build_reduction(f, static_cast<int>(k + 1), (k + 1) * n + k);
}

ReductionInstance gen_max34_instance(const CnfFormula& f) {
  try {
    f.check_max34_shape();
  } catch (const Error& e) {
    fail(ErrorKind::BadFormula, e.what());
  }
  long opt_s = oracles::brute_force_sat(f).max_satisfied;
  return build_reduction(f, 5, 5 * f.num_vars + opt_s);
}

RemarkReport check_remarks(const ReductionInstance& inst) {
  const GeometricGraph& g = inst.graph;
  auto pt = [&](VertexId v) -> const Point& { return g.point(v); };
  RemarkReport rep;

  rep.conjugate_pairs_conflict = true;
  for (int i = 0; i < inst.num_vars; ++i) {
    auto [pos, neg] = inst.literal_vertices[i];
    for (VertexId z : inst.variable_vertices[i])
      if (!edges_conflict(pt(z), pt(pos), pt(neg))) rep.conjugate_pairs_conflict = false;
  }

  rep.clause_edges_conflict = true;
  for (int j = 0; j < inst.num_clauses; ++j) {
    VertexId c = inst.clause_vertices[j];
    std::vector<VertexId> lits = g.neighbors(c);
    for (std::size_t a = 0; a < lits.size(); ++a)
      for (std::size_t b = a + 1; b < lits.size(); ++b)
        if (!edges_conflict(pt(c), pt(lits[a]), pt(lits[b]))) rep.clause_edges_conflict = false;
  }

  rep.variable_fan_clean = true;
  rep.clause_fan_clean = true;
  rep.variable_excludes_clause = true;
  for (int i = 0; i < inst.num_vars; ++i) {
    auto [pos, neg] = inst.literal_vertices[i];
    for (VertexId lit : {pos, neg}) {
      std::vector<VertexId> zs, cs;
      for (VertexId nb : g.neighbors(lit)) {
        bool is_z = false;
        for (const auto& vz : inst.variable_vertices)
          if (std::find(vz.begin(), vz.end(), nb) != vz.end()) is_z = true;
        (is_z ? zs : cs).push_back(nb);
      }
      for (std::size_t a = 0; a < zs.size(); ++a)
        for (std::size_t b = a + 1; b < zs.size(); ++b)
          if (edges_conflict(pt(lit), pt(zs[a]), pt(zs[b]))) rep.variable_fan_clean = false;
      for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a + 1; b < cs.size(); ++b)
          if (edges_conflict(pt(lit), pt(cs[a]), pt(cs[b]))) rep.clause_fan_clean = false;
      for (VertexId z : zs)
        for (VertexId c : cs)
          if (!edges_conflict(pt(lit), pt(z), pt(c))) rep.variable_excludes_clause = false;
    }
  }
  return rep;
}

std::vector<EdgeId> normalize_apx_solution(const ReductionInstance& inst, const std::vector<EdgeId>& chosen) {
  if (inst.z_per_var != 5) fail(ErrorKind::BadParameter, "normalization applies to MAX-(3,4) instances");
  std::set<EdgeId> sol(chosen.begin(), chosen.end());
  auto touches = [&](EdgeId e, VertexId v) {
    const Edge& ed = inst.graph.edge(e);
    return ed.a == v || ed.b == v;
  };

  for (int i = 0; i < inst.num_vars; ++i) {
    auto [pos, neg] = inst.literal_vertices[i];
    std::vector<int> empty_slots;
    bool pos_used = false, neg_used = false;
    for (int j = 0; j < 5; ++j) {
      bool p = sol.count(inst.e2_edge(i, j, false)) > 0;
      bool q = sol.count(inst.e2_edge(i, j, true)) > 0;
      if (p) pos_used = true;
      if (q) neg_used = true;
      if (!p && !q) empty_slots.push_back(j);
    }
    if (empty_slots.empty()) continue;

    bool use_conjugate;
    if (pos_used || neg_used) {
      // A side that already has a variable edge carries no clause edges, so
      // topping it up is free.
      use_conjugate = !pos_used;
    } else {
      // No slot used: claim the side with fewer chosen clause edges and drop
      // those edges; at most 4 lost against 5 gained.
      int pos_clause = 0, neg_clause = 0;
      for (EdgeId e : inst.e1) {
        if (!sol.count(e)) continue;
        if (touches(e, pos)) ++pos_clause;
        if (touches(e, neg)) ++neg_clause;
      }
      use_conjugate = neg_clause < pos_clause;
      VertexId side = use_conjugate ? neg : pos;
      for (EdgeId e : inst.e1)
        if (sol.count(e) && touches(e, side)) sol.erase(e);
    }
    for (int j : empty_slots) sol.insert(inst.e2_edge(i, j, use_conjugate));
  }
  return std::vector<EdgeId>(sol.begin(), sol.end());
}

}  // namespace lgg
