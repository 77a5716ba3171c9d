#include "lgg/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>

namespace lgg {

namespace {

using Clock = std::chrono::steady_clock;

// Fixed-capacity bitset sized at runtime; the solvers live on set algebra.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits full(std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < b.w_.size(); ++i) b.w_[i] = ~std::uint64_t(0);
    b.trim();
    return b;
  }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    r.subtract(o);
    return r;
  }

  // Smallest set bit at or after `from`; npos when none.
  static constexpr std::size_t npos = ~std::size_t(0);
  std::size_t next(std::size_t from = 0) const {
    if (from >= n_) return npos;
    std::size_t word = from >> 6;
    std::uint64_t cur = w_[word] & (~std::uint64_t(0) << (from & 63));
    while (true) {
      if (cur) return (word << 6) + std::countr_zero(cur);
      if (++word >= w_.size()) return npos;
      cur = w_[word];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = next(); i != npos; i = next(i + 1)) f(i);
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
  }
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

std::vector<Bits> adjacency_bits(const ConflictGraph& cg) {
  const std::size_t n = cg.node_count();
  std::vector<Bits> adj(n, Bits(n));
  for (auto [a, b] : cg.arcs()) {
    adj[a].set(b);
    adj[b].set(a);
  }
  return adj;
}

// All test weights are small integers; scale rationals to int64 when the
// common denominator allows, otherwise solve with exact rationals.
bool scale_weights(const std::vector<Rational>& w, std::vector<std::int64_t>& out) {
  mpz_class lcm = 1;
  for (const Rational& r : w) {
    mpz_class den = r.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    if (mpz_sizeinbase(lcm.get_mpz_t(), 2) > 32) return false;
  }
  out.clear();
  out.reserve(w.size());
  mpz_class total = 0;
  for (const Rational& r : w) {
    mpz_class scaled = r.numerator() * (lcm / r.denominator());
    if (!scaled.fits_slong_p()) return false;
    total += scaled;
    out.push_back(scaled.get_si());
  }
  return total.fits_slong_p() && total.get_si() < (std::int64_t(1) << 62);
}

template <typename W>
struct BranchAndBound {
  const ConflictGraph& cg;
  const std::vector<Bits>& adj;
  std::vector<W> w;
  std::vector<std::size_t> cover_order;  // static, descending degree
  std::optional<Clock::time_point> deadline;

  std::vector<EdgeId> best_set;
  W best_weight{};
  std::uint64_t nodes = 0;
  bool expired = false;

  W cover_bound(const Bits& alive) const {
    // Greedy clique cover; each clique contributes its heaviest member.
    std::vector<std::pair<Bits, W>> cliques;
    W bound{};
    for (std::size_t v : cover_order) {
      if (!alive.test(v)) continue;
      bool placed = false;
      for (auto& [members, maxw] : cliques) {
        if (members.subset_of(adj[v])) {
          members.set(v);
          if (w[v] > maxw) {
            bound += w[v] - maxw;
            maxw = w[v];
          }
          placed = true;
          break;
        }
      }
      if (!placed) {
        Bits m(cg.node_count());
        m.set(v);
        cliques.emplace_back(std::move(m), w[v]);
        bound += w[v];
      }
    }
    return bound;
  }

  void solve(Bits alive, std::vector<EdgeId> current, W current_w) {
    if (expired) return;
    if ((++nodes & 255) == 0 && deadline && Clock::now() > *deadline) {
      expired = true;
      return;
    }
    // Degree-0/1 reduction rules.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = alive.next(); v != Bits::npos; v = alive.next(v + 1)) {
        std::size_t deg = adj[v].count_and(alive);
        if (deg == 0) {
          current.push_back(v);
          current_w += w[v];
          alive.reset(v);
          changed = true;
        } else if (deg == 1) {
          std::size_t u = (adj[v] & alive).next();
          if (!(w[v] < w[u])) {
            current.push_back(v);
            current_w += w[v];
            alive.reset(v);
            alive.reset(u);
            changed = true;
          }
        }
      }
    }
    if (!alive.any()) {
      if (current_w > best_weight) {
        best_weight = current_w;
        std::sort(current.begin(), current.end());
        best_set = std::move(current);
      }
      return;
    }
    W bound = current_w + cover_bound(alive);
    if (!(bound > best_weight)) return;

    // Branch on a maximum-degree node, lowest index on ties; include first.
    std::size_t pick = Bits::npos, pick_deg = 0;
    for (std::size_t v = alive.next(); v != Bits::npos; v = alive.next(v + 1)) {
      std::size_t deg = adj[v].count_and(alive);
      if (pick == Bits::npos || deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    {
      Bits in = alive;
      in.reset(pick);
      in.subtract(adj[pick]);
      auto cur = current;
      cur.push_back(pick);
      solve(std::move(in), std::move(cur), current_w + w[pick]);
    }
    {
      Bits ex = alive;
      ex.reset(pick);
      solve(std::move(ex), std::move(current), current_w);
    }
  }
};

template <typename W>
SolveResult run_exact(const ConflictGraph& cg, const std::vector<Bits>& adj, std::vector<W> weights,
                      const SolveResult& incumbent, W incumbent_w,
                      std::optional<std::chrono::duration<double>> budget) {
  BranchAndBound<W> bb{cg, adj, std::move(weights), {}, std::nullopt};
  bb.cover_order.resize(cg.node_count());
  std::iota(bb.cover_order.begin(), bb.cover_order.end(), 0);
  std::stable_sort(bb.cover_order.begin(), bb.cover_order.end(),
                   [&](std::size_t a, std::size_t b) { return cg.degree(a) > cg.degree(b); });
  if (budget) bb.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*budget);
  bb.best_set = incumbent.chosen;
  bb.best_weight = incumbent_w;
  bb.solve(Bits::full(cg.node_count()), {}, W{});

  SolveResult res;
  res.chosen = bb.best_set;
  res.optimal = !bb.expired;
  res.nodes_explored = bb.nodes;
  Rational total;
  for (EdgeId e : res.chosen) total += cg.weight(e);
  res.total_weight = total;
  return res;
}

}  // namespace

SolveResult max_glgg_greedy(const ConflictGraph& cg, std::uint64_t seed) {
  const std::size_t n = cg.node_count();
  std::vector<Bits> adj = adjacency_bits(cg);
  std::vector<std::size_t> tie_rank(n);
  std::iota(tie_rank.begin(), tie_rank.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(tie_rank.begin(), tie_rank.end(), rng);

  Bits alive = Bits::full(n);
  Bits chosen(n);
  std::vector<EdgeId> picks;
  while (alive.any()) {
    std::size_t pick = Bits::npos;
    std::size_t pick_deg = 0, pick_rank = 0;
    for (std::size_t v = alive.next(); v != Bits::npos; v = alive.next(v + 1)) {
      std::size_t deg = adj[v].count_and(alive);
      if (pick == Bits::npos || cg.weight(v) > cg.weight(pick) ||
          (cg.weight(v) == cg.weight(pick) && (deg < pick_deg || (deg == pick_deg && tie_rank[v] < pick_rank)))) {
        pick = v;
        pick_deg = deg;
        pick_rank = tie_rank[v];
      }
    }
    picks.push_back(pick);
    chosen.set(pick);
    alive.reset(pick);
    alive.subtract(adj[pick]);
  }

  // Local search: free additions, then 2-for-1 swaps, until fixpoint.
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!chosen.test(v) && !adj[v].intersects(chosen)) {
        chosen.set(v);
        improved = true;
      }
    }
    for (std::size_t x = chosen.next(); x != Bits::npos && !improved; x = chosen.next(x + 1)) {
      Bits rest = chosen;
      rest.reset(x);
      std::vector<std::size_t> cand;
      for (std::size_t v = 0; v < n; ++v)
        if (!chosen.test(v) && !adj[v].intersects(rest)) cand.push_back(v);
      for (std::size_t i = 0; i < cand.size() && !improved; ++i)
        for (std::size_t j = i + 1; j < cand.size() && !improved; ++j) {
          if (adj[cand[i]].test(cand[j])) continue;
          if (cg.weight(cand[i]) + cg.weight(cand[j]) > cg.weight(x)) {
            chosen.reset(x);
            chosen.set(cand[i]);
            chosen.set(cand[j]);
            improved = true;
          }
        }
    }
  }

  SolveResult res;
  chosen.for_each([&](std::size_t v) { res.chosen.push_back(v); });
  for (EdgeId e : res.chosen) res.total_weight += cg.weight(e);
  res.optimal = false;
  res.nodes_explored = 0;
  return res;
}

SolveResult max_glgg_exact(const ConflictGraph& cg, std::optional<std::chrono::duration<double>> time_budget) {
  std::vector<Bits> adj = adjacency_bits(cg);
  SolveResult incumbent = max_glgg_greedy(cg, 0);
  std::vector<std::int64_t> iw;
  SolveResult res;
  if (scale_weights(cg.weights(), iw)) {
    std::int64_t start = 0;
    for (EdgeId e : incumbent.chosen) start += iw[e];
    res = run_exact<std::int64_t>(cg, adj, std::move(iw), incumbent, start, time_budget);
  } else {
    std::vector<Rational> qw = cg.weights();
    res = run_exact<Rational>(cg, adj, std::move(qw), incumbent, incumbent.total_weight, time_budget);
  }
  return res;
}

bool decide_glgg_at_least(const ConflictGraph& cg, const Rational& m,
                          std::optional<std::chrono::duration<double>> time_budget) {
  return max_glgg_exact(cg, time_budget).total_weight >= m;
}

MaximalSets enumerate_maximal_lggs(const ConflictGraph& cg, std::size_t cap) {
  const std::size_t n = cg.node_count();
  MaximalSets out;
  if (n == 0) {
    out.sets.push_back({});
    return out;
  }
  std::vector<Bits> adj = adjacency_bits(cg);
  // Maximal independent sets are maximal cliques of the compatibility
  // (complement) relation; run pivoting enumeration over that relation.
  std::vector<Bits> comp(n, Bits(n));
  for (std::size_t v = 0; v < n; ++v) {
    comp[v] = Bits::full(n).minus(adj[v]);
    comp[v].reset(v);
  }
  std::vector<EdgeId> r;

  // Returns true when enumeration must stop (cap refused an emission).
  auto bk = [&](auto&& self, Bits p, Bits x) -> bool {
    if (!p.any() && !x.any()) {
      if (out.sets.size() >= cap) {
        out.truncated = true;
        return true;
      }
      std::vector<EdgeId> s = r;
      std::sort(s.begin(), s.end());
      out.sets.push_back(std::move(s));
      return false;
    }
    std::size_t pivot = Bits::npos, pivot_score = 0;
    for (std::size_t u = p.next(); u != Bits::npos; u = p.next(u + 1)) {
      std::size_t score = p.count_and(comp[u]);
      if (pivot == Bits::npos || score > pivot_score) {
        pivot = u;
        pivot_score = score;
      }
    }
    for (std::size_t u = x.next(); u != Bits::npos; u = x.next(u + 1)) {
      std::size_t score = p.count_and(comp[u]);
      if (score > pivot_score) {
        pivot = u;
        pivot_score = score;
      }
    }
    Bits ext = p.minus(comp[pivot]);
    for (std::size_t v = ext.next(); v != Bits::npos; v = ext.next(v + 1)) {
      r.push_back(v);
      if (self(self, p & comp[v], x & comp[v])) return true;
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
    return false;
  };
  bk(bk, Bits::full(n), Bits(n));
  return out;
}

}  // namespace lgg
