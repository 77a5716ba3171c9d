#include "lgg/dilation.hpp"

#include <algorithm>
#include <queue>

#include "lgg/conflict_graph.hpp"
#include "lgg/predicates.hpp"
#include "lgg/solver.hpp"

namespace lgg {

namespace {

constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kMaxPrec = 4096;

struct EdgeLengths {
  std::vector<Real> lo, hi;
};

EdgeLengths edge_lengths(const GeometricGraph& g, mpfr_prec_t prec) {
  EdgeLengths l;
  l.lo.reserve(g.edge_count());
  l.hi.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    Rational sq = squared_distance(g.point(e.a), g.point(e.b));
    l.lo.push_back(Real::sqrt_rational(sq, prec, MPFR_RNDD));
    l.hi.push_back(Real::sqrt_rational(sq, prec, MPFR_RNDU));
  }
  return l;
}

// Single-source shortest paths with directed rounding; nullopt = unreachable.
std::vector<std::optional<Real>> dijkstra(const GeometricGraph& g, VertexId src, const std::vector<Real>& len,
                                          mpfr_rnd_t rnd, mpfr_prec_t prec) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Real>> dist(n);
  std::vector<bool> done(n, false);
  using Item = std::pair<Real, VertexId>;
  auto cmp = [](const Item& a, const Item& b) {
    int c = a.first.cmp(b.first);
    if (c != 0) return c > 0;  // min-heap on distance
    return a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  dist[src] = Real(prec);
  heap.push({*dist[src], src});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = true;
    for (EdgeId e : g.incident_edges(u)) {
      VertexId v = g.edge(e).other(u);
      if (done[v]) continue;
      Real nd = d;
      nd.add(len[e], rnd);
      if (!dist[v] || nd.cmp(*dist[v]) < 0) {
        dist[v] = nd;
        heap.push({nd, v});
      }
    }
  }
  return dist;
}

struct PairMax {
  bool has_infinite = false;
  std::pair<VertexId, VertexId> inf_witness{0, 0};
  bool has_finite = false;
  Real max_lo, max_hi;
  std::pair<VertexId, VertexId> witness{0, 0};

  // Pairs must be folded in ascending scan order within one accumulator.
  void fold(VertexId u, VertexId v, const std::optional<Interval>& ratio) {
    if (!ratio) {
      if (!has_infinite) {
        has_infinite = true;
        inf_witness = {u, v};
      }
      return;
    }
    if (!has_finite) {
      has_finite = true;
      max_lo = ratio->lo;
      max_hi = ratio->hi;
      witness = {u, v};
      return;
    }
    if (ratio->lo.cmp(max_lo) > 0) max_lo = ratio->lo;
    if (ratio->hi.cmp(max_hi) > 0) {
      max_hi = ratio->hi;
      witness = {u, v};
    }
  }

  // Order-insensitive merge; ties resolve toward the earliest pair.
  void merge(const PairMax& o) {
    if (o.has_infinite && (!has_infinite || o.inf_witness < inf_witness)) {
      has_infinite = true;
      inf_witness = o.inf_witness;
    }
    if (!o.has_finite) return;
    if (!has_finite) {
      has_finite = true;
      max_lo = o.max_lo;
      max_hi = o.max_hi;
      witness = o.witness;
      return;
    }
    if (o.max_lo.cmp(max_lo) > 0) max_lo = o.max_lo;
    int c = o.max_hi.cmp(max_hi);
    if (c > 0 || (c == 0 && o.witness < witness)) {
      if (c > 0) max_hi = o.max_hi;
      witness = o.witness;
    }
  }
};

std::optional<Interval> pair_ratio(const GeometricGraph& g, VertexId u, VertexId v,
                                   const std::optional<Real>& dlo, const std::optional<Real>& dhi,
                                   mpfr_prec_t prec) {
  if (!dlo || !dhi) return std::nullopt;
  Rational sq = squared_distance(g.point(u), g.point(v));
  Real d2_lo = Real::sqrt_rational(sq, prec, MPFR_RNDD);
  Real d2_hi = Real::sqrt_rational(sq, prec, MPFR_RNDU);
  Interval r;
  r.lo = Real::div(*dlo, d2_hi, prec, MPFR_RNDD);
  r.hi = Real::div(*dhi, d2_lo, prec, MPFR_RNDU);
  return r;
}

}  // namespace

DilationReport dilation(const GeometricGraph& g, bool with_matrix, double max_width) {
  const std::size_t n = g.vertex_count();
  if (n < 2) fail(ErrorKind::TooFewVertices, "dilation needs at least two vertices");

  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    EdgeLengths len = edge_lengths(g, prec);
    PairMax acc;
    std::vector<DilationValue> matrix;
    if (with_matrix) matrix.assign(n * n, DilationValue{});

    std::vector<PairMax> partial(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long si = 0; si < static_cast<long long>(n); ++si) {
      auto s = static_cast<VertexId>(si);
      auto dist_lo = dijkstra(g, s, len.lo, MPFR_RNDD, prec);
      auto dist_hi = dijkstra(g, s, len.hi, MPFR_RNDU, prec);
      for (VertexId v = s + 1; v < n; ++v) {
        auto ratio = pair_ratio(g, s, v, dist_lo[v], dist_hi[v], prec);
        partial[s].fold(s, v, ratio);
        if (with_matrix) {
          DilationValue dv;
          if (ratio) {
            dv.value = *ratio;
          } else {
            dv.infinite = true;
          }
          matrix[s * n + v] = dv;
          matrix[v * n + s] = dv;
        }
      }
    }
    for (const PairMax& p : partial) acc.merge(p);

    DilationReport rep;
    rep.vertex_count = n;
    rep.per_pair = std::move(matrix);
    if (acc.has_infinite) {
      rep.global.infinite = true;
      rep.witness_pair = acc.inf_witness;
      return rep;
    }
    rep.global.value = Interval{acc.max_lo, acc.max_hi};
    rep.witness_pair = acc.witness;
    if (rep.global.value.width() <= max_width) return rep;
  }
  fail(ErrorKind::BadParameter, "dilation interval did not converge at maximum precision");
}

DilationValue dilation_pair(const GeometricGraph& g, VertexId u, VertexId v, double max_width) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) fail(ErrorKind::IndexOutOfRange, "dilation_pair vertex out of range");
  if (u == v) fail(ErrorKind::SamePair, "dilation_pair needs two distinct vertices");
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    EdgeLengths len = edge_lengths(g, prec);
    auto dist_lo = dijkstra(g, u, len.lo, MPFR_RNDD, prec);
    auto dist_hi = dijkstra(g, u, len.hi, MPFR_RNDU, prec);
    auto ratio = pair_ratio(g, u, v, dist_lo[v], dist_hi[v], prec);
    if (!ratio) return DilationValue{true, {}};
    if (Interval(*ratio).width() <= max_width) return DilationValue{false, *ratio};
  }
  fail(ErrorKind::BadParameter, "dilation interval did not converge at maximum precision");
}

namespace {

// Candidate order: finite before infinite, then smaller upper bound, then
// lexicographically smaller edge set. Total and deterministic.
bool candidate_better(const DilationValue& a, const std::vector<EdgeId>& ea, const DilationValue& b,
                      const std::vector<EdgeId>& eb) {
  if (a.infinite != b.infinite) return !a.infinite;
  if (!a.infinite) {
    int c = a.value.hi.cmp(b.value.hi);
    if (c != 0) return c < 0;
  }
  return ea < eb;
}

}  // namespace

MinDilationResult min_dilation_lgg(const PointSet& points, const MinDilationOptions& opts) {
  if (points.size() > opts.max_points)
    fail(ErrorKind::TooManyPoints,
         std::to_string(points.size()) + " points exceeds the limit of " + std::to_string(opts.max_points));
  if (points.size() < 2) fail(ErrorKind::TooFewVertices, "need at least two points");

  GeometricGraph universe = complete_graph(points);
  ConflictGraph cg = build_conflict_graph(universe);
  MaximalSets maximal = enumerate_maximal_lggs(cg, opts.cap);

  struct Candidate {
    DilationValue value;
    std::vector<EdgeId> edges;
    bool valid = false;
  };
  std::vector<Candidate> results(maximal.sets.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < static_cast<long long>(maximal.sets.size()); ++i) {
    GeometricGraph sub = universe.edge_subgraph(maximal.sets[i]);
    DilationReport rep = dilation(sub, false, opts.max_width);
    results[i] = Candidate{rep.global, maximal.sets[i], true};
  }

  const Candidate* best = nullptr;
  for (const Candidate& c : results)
    if (best == nullptr || candidate_better(c.value, c.edges, best->value, best->edges)) best = &c;
  if (best == nullptr) fail(ErrorKind::BadParameter, "no maximal LGG candidates");

  MinDilationResult out;
  out.best = universe.edge_subgraph(best->edges);
  out.dilation = best->value;
  out.truncated = maximal.truncated;
  out.candidates = maximal.sets.size();
  return out;
}

bool decision_dilation(const PointSet& points, const std::optional<Rational>& k, const MinDilationOptions& opts) {
  if (!k) return true;  // k = infinity
  MinDilationResult r = min_dilation_lgg(points, opts);
  if (r.dilation.infinite) return false;
  return r.dilation.value.lo.cmp(*k) <= 0;
}

}  // namespace lgg
