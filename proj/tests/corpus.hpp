#pragma once

// Seeded corpus helpers shared by the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <vector>

#include "lgg/cnf.hpp"
#include "lgg/generators.hpp"
#include "lgg/graph.hpp"

namespace corpus {

// Distinct integer points in a small box, dense enough that diametral disks
// routinely contain third points.
inline lgg::PointSet random_points(std::size_t n, std::uint64_t seed, long box = 64) {
  return lgg::gen_random_points(n, seed,
                                lgg::Box{lgg::Rational(0), lgg::Rational(0), lgg::Rational(box), lgg::Rational(box)});
}

// Random edge subset of the complete graph, keep probability percent/100.
inline lgg::GeometricGraph random_edge_subset(const lgg::PointSet& pts, std::uint64_t seed, unsigned percent) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<lgg::VertexId, lgg::VertexId>> pairs;
  for (lgg::VertexId a = 0; a < pts.size(); ++a)
    for (lgg::VertexId b = a + 1; b < pts.size(); ++b)
      if (rng() % 100 < percent) pairs.emplace_back(a, b);
  return lgg::build_graph(pts, pairs);
}

inline lgg::CnfFormula random_cnf(int num_vars, int num_clauses, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x100000001b3ULL + 14695981039346656037ULL);
  lgg::CnfFormula f;
  f.num_vars = num_vars;
  for (int c = 0; c < num_clauses; ++c) {
    std::array<lgg::Literal, 3> clause;
    int picked = 0;
    while (picked < 3) {
      int v = static_cast<int>(rng() % num_vars);
      bool dup = false;
      for (int i = 0; i < picked; ++i)
        if (clause[i].var == v) dup = true;
      if (dup) continue;
      clause[picked++] = lgg::Literal{v, (rng() & 1) != 0};
    }
    f.clauses.push_back(clause);
  }
  return f;
}

// Every variable in exactly four clauses, three distinct variables per
// clause (needs 3k = 4n, i.e. n divisible by 3).
inline lgg::CnfFormula random_max34(int num_vars, std::uint64_t seed) {
  const int num_clauses = 4 * num_vars / 3;
  std::mt19937_64 rng(seed ^ 0xabcdef1234567890ULL);
  std::vector<int> slots;
  for (int v = 0; v < num_vars; ++v)
    for (int r = 0; r < 4; ++r) slots.push_back(v);
  while (true) {
    std::shuffle(slots.begin(), slots.end(), rng);
    bool ok = true;
    for (int c = 0; c < num_clauses && ok; ++c)
      if (slots[3 * c] == slots[3 * c + 1] || slots[3 * c] == slots[3 * c + 2] ||
          slots[3 * c + 1] == slots[3 * c + 2])
        ok = false;
    if (!ok) continue;
    lgg::CnfFormula f;
    f.num_vars = num_vars;
    for (int c = 0; c < num_clauses; ++c) {
      std::array<lgg::Literal, 3> clause;
      for (int i = 0; i < 3; ++i) clause[i] = lgg::Literal{slots[3 * c + i], (rng() & 1) != 0};
      f.clauses.push_back(clause);
    }
    return f;
  }
}

// K_{2,3} subgraph test: some vertex pair with three common neighbors.
inline bool has_k23(const lgg::GeometricGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const lgg::Edge& e : g.edges()) adj[e.a][e.b] = adj[e.b][e.a] = true;
  for (lgg::VertexId a = 0; a < n; ++a)
    for (lgg::VertexId b = a + 1; b < n; ++b) {
      int common = 0;
      for (lgg::VertexId w = 0; w < n; ++w)
        if (w != a && w != b && adj[a][w] && adj[b][w]) ++common;
      if (common >= 3) return true;
    }
  return false;
}

}  // namespace corpus
