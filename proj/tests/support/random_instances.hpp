#pragma once

#include <algorithm>
#include <random>

#include "dfone/digraph.hpp"
#include "dfone/linalg.hpp"
#include "dfone/steady.hpp"

namespace dfone::testing {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline DiGraph random_digraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && coin(rng)) arcs.push_back({a, b});
  return DiGraph(n, arcs);
}

// l = t = 1 and not strongly connected, 2 <= c <= max_c.
inline DiGraph random_single_linkage_graph(std::mt19937_64& rng, int max_c = 8) {
  while (true) {
    const int c = uniform_int(rng, 2, max_c);
    const double p = std::uniform_real_distribution<double>(0.15, 0.5)(rng);
    DiGraph g = random_digraph(rng, c, p);
    const ComponentStructure s = analyze_components(g);
    if (s.weak_count == 1 && s.terminal_count() == 1 && !s.strongly_connected()) return g;
  }
}

// Integer h with sum zero, h(C'') <= 0 and h != 0.
inline RationalVector random_h(std::mt19937_64& rng, const DiGraph& g, int lo = -3, int hi = 2) {
  const AbsorbingSplit split = split_absorbing(g);
  while (true) {
    RationalVector h(g.vertex_count(), Rational(0));
    for (Vertex v = 0; v < g.vertex_count(); ++v) h[v] = uniform_int(rng, lo, hi);
    const Vertex fix = split.c_prime[uniform_int(rng, 0, static_cast<int>(split.c_prime.size()) - 1)];
    h[fix] -= sum(h);
    if (sum_over(h, split.c_double) > 0)
      for (auto& q : h) q = -q;
    if (std::any_of(h.begin(), h.end(), [](const Rational& q) { return q != 0; })) return h;
  }
}

// Positive rationals p/q with small numerators and denominators.
inline ArcValues random_rational_rates(std::mt19937_64& rng, const DiGraph& g) {
  ArcValues out;
  for (std::size_t k = 0; k < g.arc_count(); ++k) out.push_back(Rational(uniform_int(rng, 1, 20), uniform_int(rng, 1, 9)));
  for (auto& q : out) q.canonicalize();
  return out;
}

inline RationalMatrix random_row_sum_zero(std::mt19937_64& rng, int n, double density = 0.6) {
  std::bernoulli_distribution coin(density);
  RationalMatrix z(n, n);
  for (int r = 0; r < n; ++r) {
    Rational row = 0;
    for (int c = 0; c < n; ++c) {
      if (r == c || !coin(rng)) continue;
      z(r, c) = uniform_int(rng, -4, 5);
      row += z(r, c);
    }
    z(r, r) = -row;
  }
  return z;
}

// Chain c -> ... -> 1 with back arcs j-1 -> j for j >= 3.
inline DiGraph chain_graph(int c) {
  std::vector<Arc> arcs;
  for (int j = 1; j < c; ++j) arcs.push_back({j, j - 1});
  for (int j = 2; j < c; ++j) arcs.push_back({j - 1, j});
  return DiGraph(c, arcs);
}

// C' is a cycle (or a single vertex); C'' a random in-tree rooted at the exit
// vertex with random reverse arcs.
inline DiGraph random_tree_like_graph(std::mt19937_64& rng, int max_c = 9) {
  const int prime = uniform_int(rng, 1, 3);
  const int inner = uniform_int(rng, 1, std::max(1, max_c - prime));
  const int c = prime + inner;
  std::vector<Arc> arcs;
  for (int v = 0; v < prime && prime > 1; ++v) arcs.push_back({v, (v + 1) % prime});
  if (prime == 3 && uniform_int(rng, 0, 1)) arcs.push_back({0, 2});
  const Vertex exit = prime;
  for (int v = 0; v < prime; ++v)
    if (v == 0 || uniform_int(rng, 0, 1)) arcs.push_back({exit, v});
  for (Vertex v = prime + 1; v < c; ++v) {
    const Vertex parent = uniform_int(rng, prime, v - 1);
    arcs.push_back({v, parent});
    if (uniform_int(rng, 0, 1)) arcs.push_back({parent, v});
  }
  // Shuffle ids so the structure does not follow the numbering.
  std::vector<Vertex> perm(c);
  for (int v = 0; v < c; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Arc& a : arcs) a = {perm[a.tail], perm[a.head]};
  return DiGraph(c, arcs);
}

}  // namespace dfone::testing
