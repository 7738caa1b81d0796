#include "dfone/special.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace dfone {

namespace {

const Rational& rate(const DiGraph& graph, const ArcValues& kappa, Vertex tail, Vertex head) {
  return kappa.at(*graph.arc_index({tail, head}));
}

Rational rate_or_zero(const DiGraph& graph, const ArcValues& kappa, Vertex tail, Vertex head) {
  auto k = graph.arc_index({tail, head});
  return k ? kappa.at(*k) : Rational(0);
}

// Number of simple paths from `from` to `to`, counting stops at `cap`.
int count_paths(const DiGraph& graph, Vertex from, Vertex to, int cap) {
  std::vector<bool> on_path(graph.vertex_count(), false);
  int found = 0;
  std::function<void(Vertex)> walk = [&](Vertex v) {
    if (found >= cap) return;
    if (v == to) {
      ++found;
      return;
    }
    on_path[v] = true;
    for (std::size_t k : graph.out_arcs(v)) {
      const Vertex w = graph.arcs()[k].head;
      if (!on_path[w]) walk(w);
    }
    on_path[v] = false;
  };
  walk(from);
  return found;
}

}  // namespace

bool is_chain(const DiGraph& graph) {
  const int c = graph.vertex_count();
  if (c < 2) return false;
  std::vector<Arc> expected;
  for (Vertex j = 1; j < c; ++j) expected.push_back({j, j - 1});
  for (Vertex j = 2; j < c; ++j) expected.push_back({j - 1, j});
  std::sort(expected.begin(), expected.end());
  return graph.arcs() == expected;
}

RecursionAnalysis chain_analysis(const DiGraph& graph, const RationalVector& h, const std::optional<ArcValues>& kappa) {
  RecursionAnalysis out;
  if (!is_chain(graph)) return out;
  if (static_cast<int>(h.size()) != graph.vertex_count()) throw std::invalid_argument("h has the wrong length");
  out.applies = true;
  const int c = graph.vertex_count();

  auto tail_set = [&](Vertex from) {
    VertexSet s;
    for (Vertex v = from; v < c; ++v) s.push_back(v);
    return s;
  };
  out.exists_conditions.push_back(make_condition(tail_set(1), Relation::Negative, h));
  out.forall_conditions = out.exists_conditions;
  for (Vertex j = 2; j < c; ++j) out.forall_conditions.push_back(make_condition(tail_set(j), Relation::NonPositive, h));
  out.exists_holds = all_satisfied(out.exists_conditions);
  out.forall_holds = all_satisfied(out.forall_conditions);

  if (kappa) {
    ThetaVector theta{tail_set(1), {}};
    Rational previous = -sum_over(h, tail_set(1)) / rate(graph, *kappa, 1, 0);
    theta.values.push_back(previous);
    for (Vertex j = 2; j < c; ++j) {
      previous = (rate(graph, *kappa, j - 1, j) * previous - sum_over(h, tail_set(j))) / rate(graph, *kappa, j, j - 1);
      theta.values.push_back(previous);
    }
    out.theta = std::move(theta);
  }
  return out;
}

RecursionAnalysis tree_like_analysis(const DiGraph& graph, const RationalVector& h, const std::optional<ArcValues>& kappa) {
  RecursionAnalysis out;
  if (static_cast<int>(h.size()) != graph.vertex_count()) throw std::invalid_argument("h has the wrong length");
  AbsorbingSplit split;
  try {
    split = split_absorbing(graph);
  } catch (const UnsupportedNetwork&) {
    return out;
  }
  if (split.c_double.empty()) return out;

  VertexSet exits;
  for (Vertex v : split.c_double)
    for (std::size_t k : graph.out_arcs(v))
      if (contains(split.c_prime, graph.arcs()[k].head)) {
        exits.push_back(v);
        break;
      }
  if (exits.size() != 1) return out;
  const Vertex l = exits.front();
  for (Vertex v : split.c_double)
    if (count_paths(graph, v, l, 2) != 1) return out;

  // With unique paths, the BFS tree rooted at l over reversed arcs is the path tree.
  TreeLikeStructure s;
  s.exit = l;
  std::map<Vertex, int> depth{{l, 0}};
  std::deque<Vertex> queue{l};
  std::vector<Vertex> order;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (std::size_t k : graph.in_arcs(v)) {
      const Vertex w = graph.arcs()[k].tail;
      if (depth.count(w)) continue;
      depth[w] = depth[v] + 1;
      s.parent[w] = v;
      queue.push_back(w);
    }
  }
  for (Vertex v : split.c_double) s.descendants[v] = {};
  for (Vertex v : split.c_double)
    for (Vertex cur = v;; cur = s.parent.at(cur)) {
      s.descendants[cur].push_back(v);
      if (cur == l) break;
    }
  for (auto& [v, set] : s.descendants) set = make_vertex_set(set);
  for (const auto& [j, p] : s.parent) s.reverse_arc[j] = graph.has_arc(p, j);

  out.applies = true;
  out.exists_conditions.push_back(make_condition(split.c_double, Relation::Negative, h));
  out.forall_conditions = out.exists_conditions;
  for (const auto& [j, present] : s.reverse_arc) {
    const Condition cond = make_condition(s.descendants[j], present ? Relation::NonPositive : Relation::Negative, h);
    if (!present) out.exists_conditions.push_back(cond);
    out.forall_conditions.push_back(cond);
  }
  out.exists_holds = all_satisfied(out.exists_conditions);
  out.forall_holds = all_satisfied(out.forall_conditions);

  if (kappa) {
    std::map<Vertex, Rational> theta;
    Rational outflow = 0;
    for (std::size_t k : graph.out_arcs(l))
      if (contains(split.c_prime, graph.arcs()[k].head)) outflow += (*kappa)[k];
    theta[l] = -sum_over(h, split.c_double) / outflow;
    for (Vertex j : order) {
      if (j == l) continue;
      const Vertex p = s.parent.at(j);
      theta[j] = (rate_or_zero(graph, *kappa, p, j) * theta.at(p) - sum_over(h, s.descendants.at(j))) /
                 rate(graph, *kappa, j, p);
    }
    ThetaVector tv{split.c_double, {}};
    for (Vertex v : split.c_double) tv.values.push_back(theta.at(v));
    out.theta = std::move(tv);
  }
  out.structure = std::move(s);
  return out;
}

}  // namespace dfone
