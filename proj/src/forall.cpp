#include "dfone/forall.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>

#include "dfone/steady.hpp"

namespace dfone {

namespace {

// The graph with C' contracted to the sink; ids below are contracted ids.
struct Reduced {
  Contraction con;
  Vertex sink = 0;
  VertexSet inner;
  ComponentStructure comps;

  Vertex up(Vertex v) const { return con.old_of_new.at(v).front(); }
  VertexSet up(const VertexSet& s) const { return con.lift(s); }
  Vertex down(Vertex v) const { return con.new_of_old.at(v); }
  VertexSet down(const VertexSet& s) const { return con.project(s); }
  const VertexSet& component(Vertex v) const { return comps.components[comps.component_of[v]]; }
};

Reduced reduce(const DiGraph& graph) {
  const AbsorbingSplit split = split_absorbing(graph);
  if (split.c_double.empty()) throw UnsupportedNetwork("graph is strongly connected");
  Reduced r;
  r.con = contract_absorbing(graph, split.c_prime);
  r.sink = r.con.sink;
  r.inner = set_difference(r.con.graph.all_vertices(), {r.sink});
  r.comps = analyze_components(r.con.graph);
  return r;
}

// Vertices that reach `target` along paths avoiding `forbidden`.
VertexSet reach_avoiding(const DiGraph& g, Vertex target, const VertexSet& forbidden) {
  if (contains(forbidden, target)) return {};
  std::vector<bool> seen(g.vertex_count(), false);
  for (Vertex v : forbidden) seen[v] = true;
  std::deque<Vertex> queue{target};
  seen[target] = true;
  VertexSet out{target};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (std::size_t k : g.in_arcs(v)) {
      const Vertex w = g.arcs()[k].tail;
      if (seen[w]) continue;
      seen[w] = true;
      out.push_back(w);
      queue.push_back(w);
    }
  }
  return make_vertex_set(std::move(out));
}

// {k in C'' : every path from k to the sink meets `removed`} ∪ removed.
VertexSet dominated_by(const Reduced& r, const VertexSet& removed) {
  const VertexSet reach = reach_avoiding(r.con.graph, r.sink, removed);
  return set_difference(r.inner, reach);
}

std::map<Vertex, VertexSet> contracted_U(const Reduced& r) {
  std::map<Vertex, VertexSet> u;
  for (Vertex i : r.inner) u[i] = dominated_by(r, {i});
  return u;
}

// Parent of each set: the smallest strictly larger member containing it.
std::map<Vertex, TreeParent> laminar_tree(const std::map<Vertex, VertexSet>& family) {
  std::map<Vertex, TreeParent> parent;
  for (const auto& [i, set] : family) {
    TreeParent best;
    for (const auto& [k, other] : family) {
      if (k == i || other.size() <= set.size() || !is_subset(set, other)) continue;
      if (!best || other.size() < family.at(*best).size()) best = k;
    }
    parent[i] = best;
  }
  return parent;
}

VertexSet tree_descendants(const std::map<Vertex, TreeParent>& parent, Vertex j) {
  VertexSet out;
  for (const auto& [v, p] : parent) {
    TreeParent cur = v;
    while (cur && *cur != j) cur = parent.at(*cur);
    if (cur) out.push_back(v);
  }
  return make_vertex_set(std::move(out));
}

VertexSet lift_keys(const Reduced& r, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out.push_back(r.up(v));
  return make_vertex_set(std::move(out));
}

// Bitmask view of the contracted graph for the subset enumerations.
struct Masks {
  std::vector<std::uint32_t> pred;
  std::uint32_t inner = 0;
  std::uint32_t all = 0;
};

Masks masks_of(const Reduced& r) {
  Masks m;
  const int n = r.con.graph.vertex_count();
  m.pred.assign(n, 0);
  for (const Arc& a : r.con.graph.arcs()) m.pred[a.head] |= std::uint32_t{1} << a.tail;
  for (Vertex v : r.inner) m.inner |= std::uint32_t{1} << v;
  m.all = m.inner | (std::uint32_t{1} << r.sink);
  return m;
}

std::uint32_t backward_closure(const Masks& m, std::uint32_t start, std::uint32_t allowed) {
  std::uint32_t reach = start & allowed;
  while (true) {
    std::uint32_t next = reach;
    for (std::uint32_t rest = reach; rest; rest &= rest - 1) next |= m.pred[__builtin_ctz(rest)] & allowed;
    if (next == reach) return reach;
    reach = next;
  }
}

VertexSet from_mask(std::uint32_t mask) {
  VertexSet out;
  for (; mask; mask &= mask - 1) out.push_back(__builtin_ctz(mask));
  return out;
}

// I_U: members of U not postdominated by another member of U.
VertexSet partition_index(const std::map<Vertex, VertexSet>& u, const VertexSet& set) {
  VertexSet out;
  for (Vertex i : set) {
    bool covered = false;
    for (Vertex k : set)
      if (k != i && contains(u.at(k), i)) covered = true;
    if (!covered) out.push_back(i);
  }
  return out;
}

// Family in contracted ids, with partitions.
std::vector<std::pair<VertexSet, VertexSet>> contracted_family(const Reduced& r, const std::map<Vertex, VertexSet>& u,
                                                                Vertex j) {
  if (static_cast<int>(r.inner.size()) > kInarbCap)
    throw std::length_error("j_inarb_family: more than " + std::to_string(kInarbCap) + " vertices outside C'");
  const Masks m = masks_of(r);
  const std::uint32_t jbit = std::uint32_t{1} << j;
  const std::uint32_t others = m.inner & ~jbit;
  std::vector<std::pair<VertexSet, VertexSet>> out;
  std::uint32_t sub = others;
  while (true) {
    const std::uint32_t set = sub | jbit;
    if (backward_closure(m, jbit, set) == set) {
      const std::uint32_t outside = m.inner & ~set;
      if ((backward_closure(m, std::uint32_t{1} << r.sink, m.all & ~set) & outside) == outside) {
        VertexSet s = from_mask(set);
        VertexSet idx = partition_index(u, s);
        out.emplace_back(std::move(s), std::move(idx));
      }
    }
    if (sub == 0) break;
    sub = (sub - 1) & others;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
  });
  return out;
}

std::vector<VertexSet> eligible_per_component(const Reduced& r) {
  std::vector<VertexSet> out;
  for (std::size_t c = 0; c < r.comps.components.size(); ++c) {
    if (r.comps.absorbing[c]) continue;
    VertexSet eligible;
    for (Vertex v : r.comps.components[c])
      for (std::size_t k : r.con.graph.out_arcs(v))
        if (r.comps.component_of[r.con.graph.arcs()[k].head] != static_cast<int>(c)) {
          eligible.push_back(v);
          break;
        }
    out.push_back(eligible);
  }
  return out;
}

std::map<Vertex, VertexSet> contracted_W(const Reduced& r) {
  const int n = r.con.graph.vertex_count();
  std::map<Vertex, VertexSet> w;
  for (Vertex j : r.inner) {
    std::vector<Arc> arcs = r.con.graph.arcs();
    arcs.push_back({j, n});
    arcs.push_back({r.sink, n});
    const DiGraph aux(n + 1, std::move(arcs));
    VertexSet set{j};
    for (Vertex i : r.inner)
      if (i != j && two_disjoint_paths(aux, i, n).exists) set.push_back(i);
    w[j] = make_vertex_set(std::move(set));
  }
  return w;
}

VertexSet contracted_J(const Reduced& r, const VertexSet& J) {
  VertexSet cj = r.down(J);
  const auto eligible = eligible_per_component(r);
  std::vector<int> hits(r.comps.components.size(), 0);
  for (Vertex j : cj) {
    if (j == r.sink) throw std::invalid_argument("J must lie outside C'");
    const int comp = r.comps.component_of[j];
    ++hits[comp];
    bool ok = false;
    for (const auto& e : eligible)
      if (contains(e, j)) ok = true;
    if (!ok) throw std::invalid_argument("vertex " + std::to_string(r.up(j) + 1) + " cannot leave its component");
  }
  for (std::size_t c = 0; c < hits.size(); ++c)
    if (!r.comps.absorbing[c] && hits[c] != 1) throw std::invalid_argument("J must meet each non-absorbing component once");
  return cj;
}

bool exists_negative(const std::map<Vertex, VertexSet>& u, const VertexSet& indices, const RationalVector& hc) {
  for (Vertex i : indices)
    if (sum_over(hc, u.at(i)) < 0) return true;
  return false;
}

bool all_nonpositive(const std::map<Vertex, VertexSet>& u, const RationalVector& hc) {
  for (const auto& [i, set] : u)
    if (sum_over(hc, set) > 0) return false;
  return true;
}

RationalVector contracted_h(const Reduced& r, const RationalVector& h) {
  if (static_cast<std::size_t>(r.con.new_of_old.size()) != h.size()) throw std::invalid_argument("h has the wrong length");
  RationalVector hc(r.con.graph.vertex_count(), Rational(0));
  for (std::size_t v = 0; v < h.size(); ++v) hc[r.con.new_of_old[v]] += h[v];
  return hc;
}

}  // namespace

PostdomFamily postdominators(const DiGraph& graph, const VertexSet& J) {
  const Reduced r = reduce(graph);
  const VertexSet cj = contracted_J(r, J);
  const auto u = contracted_U(r);

  PostdomFamily out;
  for (const auto& [i, set] : u) out.U[r.up(i)] = r.up(set);
  for (const auto& [i, p] : laminar_tree(u)) out.parent[r.up(i)] = p ? TreeParent(r.up(*p)) : std::nullopt;
  for (Vertex j : r.inner) out.U_component[r.up(j)] = r.up(dominated_by(r, r.component(j)));

  std::map<Vertex, VertexSet> laminar;
  for (Vertex j : cj) {
    VertexSet all;
    for (Vertex k : r.component(j)) all = set_union(all, u.at(k));
    laminar[j] = all;
    out.laminar[r.up(j)] = r.up(all);
  }
  const auto lparent = laminar_tree(laminar);
  for (const auto& [j, p] : lparent) out.laminar_parent[r.up(j)] = p ? TreeParent(r.up(*p)) : std::nullopt;

  for (Vertex j : cj) {
    out.reach_laminar[r.up(j)] = lift_keys(r, tree_descendants(lparent, j));
    const VertexSet comps = reach_set(r.comps.condensation, r.comps.component_of[j]);
    VertexSet reps;
    for (Vertex k : cj)
      if (contains(comps, r.comps.component_of[k])) reps.push_back(k);
    out.reach_condensation[r.up(j)] = lift_keys(r, make_vertex_set(reps));
  }
  return out;
}

PostdomFamily postdominators(const DiGraph& graph) { return postdominators(graph, choose_J(graph)); }

InarbFamily j_inarb_family(const DiGraph& graph, Vertex j) {
  const Reduced r = reduce(graph);
  const Vertex cj = r.down(j);
  if (cj == r.sink) throw std::invalid_argument("j must lie outside C'");
  const auto u = contracted_U(r);
  InarbFamily out;
  for (const auto& [set, idx] : contracted_family(r, u, cj)) {
    out.sets.push_back(r.up(set));
    out.partitions[r.up(set)] = lift_keys(r, idx);
  }
  return out;
}

std::map<Vertex, VertexSet> w_sets(const DiGraph& graph) {
  const Reduced r = reduce(graph);
  std::map<Vertex, VertexSet> out;
  for (const auto& [j, set] : contracted_W(r)) out[r.up(j)] = lift_keys(r, set);
  return out;
}

VertexSet choose_J(const DiGraph& graph) {
  const Reduced r = reduce(graph);
  VertexSet out;
  for (const auto& e : eligible_per_component(r)) out.push_back(r.up(e.front()));
  return make_vertex_set(std::move(out));
}

std::vector<VertexSet> valid_J_choices(const DiGraph& graph, std::size_t limit) {
  const Reduced r = reduce(graph);
  const auto eligible = eligible_per_component(r);
  std::size_t total = 1;
  for (const auto& e : eligible) {
    total *= e.size();
    if (total > limit) throw std::length_error("valid_J_choices: too many choices");
  }
  std::vector<VertexSet> out;
  VertexSet current;
  std::function<void(std::size_t)> pick = [&](std::size_t c) {
    if (c == eligible.size()) {
      out.push_back(make_vertex_set(current));
      return;
    }
    for (Vertex v : eligible[c]) {
      current.push_back(r.up(v));
      pick(c + 1);
      current.pop_back();
    }
  };
  pick(0);
  std::sort(out.begin(), out.end());
  return out;
}

WFamily W_of(const DiGraph& graph, const VertexSet& J) {
  const Reduced r = reduce(graph);
  const VertexSet cj = contracted_J(r, J);
  const auto w = contracted_W(r);
  WFamily out;
  for (const auto& [j, set] : w) out.W[r.up(j)] = lift_keys(r, set);
  out.J = J;
  for (Vertex j : cj) out.inside[r.up(j)] = is_subset(w.at(j), r.component(j));
  return out;
}

WFamily W_of(const DiGraph& graph) { return W_of(graph, choose_J(graph)); }

ForallCondition forall_condition(const DiGraph& graph, const RationalVector& h, const VertexSet& J) {
  const Reduced r = reduce(graph);
  const VertexSet cj = contracted_J(r, J);
  const auto u = contracted_U(r);
  const auto w = contracted_W(r);

  std::vector<VertexSet> strict;
  for (Vertex j : cj)
    if (is_subset(w.at(j), r.component(j))) strict.push_back(dominated_by(r, r.component(j)));

  ForallCondition out;
  std::vector<VertexSet> listed;
  for (const auto& [i, set] : u) {
    const bool is_strict = std::find(strict.begin(), strict.end(), set) != strict.end();
    if (std::find(listed.begin(), listed.end(), set) != listed.end()) continue;
    listed.push_back(set);
    out.conditions.push_back(make_condition(r.up(set), is_strict ? Relation::Negative : Relation::NonPositive, h));
  }
  for (const auto& set : strict) {
    if (std::find(listed.begin(), listed.end(), set) != listed.end()) continue;
    listed.push_back(set);
    out.conditions.push_back(make_condition(r.up(set), Relation::Negative, h));
  }
  out.holds = all_satisfied(out.conditions);
  return out;
}

ForallCondition forall_condition(const DiGraph& graph, const RationalVector& h) {
  return forall_condition(graph, h, choose_J(graph));
}

ForallFormulations forall_formulations(const DiGraph& graph, const RationalVector& h, const VertexSet& J) {
  const Reduced r = reduce(graph);
  const VertexSet cj = contracted_J(r, J);
  const RationalVector hc = contracted_h(r, h);
  const auto u = contracted_U(r);
  const auto menger = contracted_W(r);

  ForallFormulations out;
  out.inarb = true;
  std::map<Vertex, VertexSet> w;
  for (Vertex j : r.inner) {
    bool negative = false;
    VertexSet union_of_indices;
    for (const auto& [set, idx] : contracted_family(r, u, j)) {
      const Rational value = sum_over(hc, set);
      if (value > 0) out.inarb = false;
      if (value < 0) negative = true;
      union_of_indices = set_union(union_of_indices, idx);
    }
    if (!negative) out.inarb = false;
    if (union_of_indices != menger.at(j))
      throw std::logic_error("W(" + std::to_string(r.up(j) + 1) + ") differs between the two computations");
    w[j] = union_of_indices;
  }

  const bool base = all_nonpositive(u, hc);
  out.postdom = base;
  for (Vertex j : r.inner) out.postdom = out.postdom && exists_negative(u, w.at(j), hc);
  out.restricted = base;
  out.non_redundant = base;
  out.main_theorem = base;
  for (Vertex j : cj) {
    out.restricted = out.restricted && exists_negative(u, w.at(j), hc);
    if (is_subset(w.at(j), r.component(j))) {
      out.non_redundant = out.non_redundant && exists_negative(u, w.at(j), hc);
      out.main_theorem = out.main_theorem && sum_over(hc, dominated_by(r, r.component(j))) < 0;
    }
  }
  return out;
}

bool forall_bruteforce(const DiGraph& graph, const RationalVector& h) {
  const Reduced r = reduce(graph);
  const RationalVector hc = contracted_h(r, h);
  const auto u = contracted_U(r);
  for (Vertex j : r.inner) {
    bool negative = false;
    for (const auto& entry : contracted_family(r, u, j)) {
      const Rational value = sum_over(hc, entry.first);
      if (value > 0) return false;
      if (value < 0) negative = true;
    }
    if (!negative) return false;
  }
  return true;
}

std::optional<ArcValues> falsify_kappa(const DiGraph& graph, const RationalVector& h) {
  if (forall_condition(graph, h).holds) return std::nullopt;
  const ArcValues ones = unit_rates(graph);
  // Covers a failed exists-condition and families whose h-sums all vanish.
  if (!exists_for_kappa(graph, ones, h)) return ones;

  const Reduced r = reduce(graph);
  const RationalVector hc = contracted_h(r, h);
  const auto u = contracted_U(r);

  std::vector<VertexSet> candidates;
  for (const auto& [i, set] : u)
    if (sum_over(hc, set) > 0) candidates.push_back(set);
  if (static_cast<int>(r.inner.size()) <= kInarbCap)
    for (Vertex j : r.inner)
      for (const auto& entry : contracted_family(r, u, j))
        if (sum_over(hc, entry.first) > 0 &&
            std::find(candidates.begin(), candidates.end(), entry.first) == candidates.end())
          candidates.push_back(entry.first);

  for (const VertexSet& set : candidates) {
    const VertexSet original = r.up(set);
    std::vector<std::size_t> crossing = entering_arcs(graph, original);
    for (std::size_t k : leaving_arcs(graph, original)) crossing.push_back(k);
    Rational scale = 1;
    for (int step = 1; step <= kFalsifySteps; ++step) {
      scale /= 10;
      ArcValues kappa = ones;
      for (std::size_t k : crossing) kappa[k] = scale;
      if (!exists_for_kappa(graph, kappa, h)) return kappa;
    }
  }
  return std::nullopt;
}

}  // namespace dfone
