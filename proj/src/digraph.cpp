#include "dfone/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dfone/max_flow.hpp"

namespace dfone {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool contains(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

bool is_subset(const VertexSet& inner, const VertexSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.empty();
}

Rational sum_over(const RationalVector& values, const VertexSet& set) {
  Rational total = 0;
  for (Vertex v : set) total += values.at(static_cast<std::size_t>(v));
  return total;
}

std::string format_set(const VertexSet& set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) os << (i ? "," : "") << set[i] + 1;
  os << '}';
  return os.str();
}

std::string format_arc(const Arc& arc) {
  return std::to_string(arc.tail + 1) + "->" + std::to_string(arc.head + 1);
}

DiGraph::DiGraph(int vertex_count, std::vector<Arc> arcs)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), out_(vertex_count), in_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    const Arc& a = arcs_[k];
    if (a.tail < 0 || a.head < 0 || a.tail >= vertex_count || a.head >= vertex_count)
      throw std::invalid_argument("arc " + format_arc(a) + " references a missing vertex");
    if (a.tail == a.head) throw std::invalid_argument("self-loop at vertex " + std::to_string(a.tail + 1));
    if (k > 0 && arcs_[k - 1] == a) throw std::invalid_argument("duplicate arc " + format_arc(a));
    out_[a.tail].push_back(k);
    in_[a.head].push_back(k);
  }
}

std::optional<std::size_t> DiGraph::arc_index(const Arc& arc) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), arc);
  if (it == arcs_.end() || *it != arc) return std::nullopt;
  return static_cast<std::size_t>(it - arcs_.begin());
}

VertexSet DiGraph::all_vertices() const {
  VertexSet all(vertex_count_);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

ComponentStructure analyze_components(const DiGraph& graph) {
  const int n = graph.vertex_count();
  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), raw_component(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<VertexSet> raw;
  int counter = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<Vertex, std::size_t>> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      const auto& outs = graph.out_arcs(v);
      if (next < outs.size()) {
        const Vertex w = graph.arcs()[outs[next++]].head;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        VertexSet comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        raw.push_back(make_vertex_set(std::move(comp)));
      }
    }
  }

  ComponentStructure s;
  s.components = std::move(raw);
  std::sort(s.components.begin(), s.components.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  s.component_of.assign(n, -1);
  for (std::size_t c = 0; c < s.components.size(); ++c)
    for (Vertex v : s.components[c]) s.component_of[v] = static_cast<int>(c);

  const int k = static_cast<int>(s.components.size());
  s.absorbing.assign(k, true);
  std::vector<Arc> condensed;
  for (const Arc& a : graph.arcs()) {
    const int from = s.component_of[a.tail];
    const int to = s.component_of[a.head];
    if (from == to) continue;
    s.absorbing[from] = false;
    condensed.push_back({from, to});
  }
  std::sort(condensed.begin(), condensed.end());
  condensed.erase(std::unique(condensed.begin(), condensed.end()), condensed.end());
  s.condensation = DiGraph(k, std::move(condensed));
  for (int c = 0; c < k; ++c)
    if (s.absorbing[c]) s.absorbing_components.push_back(c);

  // Weak components by union-find over the underlying undirected graph.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Arc& a : graph.arcs()) parent[find(a.tail)] = find(a.head);
  for (int v = 0; v < n; ++v)
    if (find(v) == v) ++s.weak_count;
  return s;
}

namespace {

VertexSet search(const DiGraph& graph, const VertexSet& start, bool backwards) {
  std::vector<bool> seen(graph.vertex_count(), false);
  std::deque<Vertex> queue;
  for (Vertex v : start) {
    if (v < 0 || v >= graph.vertex_count()) throw std::out_of_range("vertex out of range");
    if (!seen[v]) {
      seen[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const auto& arcs = backwards ? graph.in_arcs(v) : graph.out_arcs(v);
    for (std::size_t k : arcs) {
      const Vertex w = backwards ? graph.arcs()[k].tail : graph.arcs()[k].head;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < graph.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

}  // namespace

VertexSet reach_set(const DiGraph& graph, const VertexSet& targets) { return search(graph, targets, true); }
VertexSet reach_set(const DiGraph& graph, Vertex target) { return search(graph, {target}, true); }
VertexSet forward_set(const DiGraph& graph, const VertexSet& sources) { return search(graph, sources, false); }

std::vector<VertexSet> closed_sets(const DiGraph& graph) {
  const ComponentStructure s = analyze_components(graph);
  if (s.strongly_connected()) return {};
  const int k = static_cast<int>(s.components.size());
  const int non_absorbing = k - s.terminal_count();
  if (non_absorbing > 20) throw std::length_error("closed_sets: more than 20 non-absorbing components");

  // Topological order of the condensation (Kahn), sources first.
  std::vector<int> indegree(k, 0), order;
  for (const Arc& a : s.condensation.arcs()) ++indegree[a.head];
  std::deque<int> ready;
  for (int c = 0; c < k; ++c)
    if (indegree[c] == 0) ready.push_back(c);
  while (!ready.empty()) {
    const int c = ready.front();
    ready.pop_front();
    order.push_back(c);
    for (std::size_t e : s.condensation.out_arcs(c))
      if (--indegree[s.condensation.arcs()[e].head] == 0) ready.push_back(s.condensation.arcs()[e].head);
  }

  std::vector<VertexSet> result;
  std::vector<bool> chosen(k, false);
  std::function<void(std::size_t, int)> visit = [&](std::size_t pos, int count) {
    if (pos == order.size()) {
      if (count == 0 || count == k) return;
      VertexSet u;
      for (int c = 0; c < k; ++c)
        if (chosen[c]) u.insert(u.end(), s.components[c].begin(), s.components[c].end());
      result.push_back(make_vertex_set(std::move(u)));
      return;
    }
    const int c = order[pos];
    visit(pos + 1, count);
    bool allowed = true;
    for (std::size_t e : s.condensation.in_arcs(c))
      if (!chosen[s.condensation.arcs()[e].tail]) allowed = false;
    if (allowed) {
      chosen[c] = true;
      visit(pos + 1, count + 1);
      chosen[c] = false;
    }
  };
  visit(0, 0);
  std::sort(result.begin(), result.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return result;
}

std::vector<std::size_t> entering_arcs(const DiGraph& graph, const VertexSet& set) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < graph.arc_count(); ++k) {
    const Arc& a = graph.arcs()[k];
    if (!contains(set, a.tail) && contains(set, a.head)) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> leaving_arcs(const DiGraph& graph, const VertexSet& set) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < graph.arc_count(); ++k) {
    const Arc& a = graph.arcs()[k];
    if (contains(set, a.tail) && !contains(set, a.head)) out.push_back(k);
  }
  return out;
}

Rational excess_of(const DiGraph& graph, const ArcValues& z, const VertexSet& set) {
  if (z.size() != graph.arc_count()) throw std::invalid_argument("excess_of: z must cover every arc");
  for (Vertex v : set)
    if (v < 0 || v >= graph.vertex_count()) throw std::invalid_argument("excess_of: set is not a vertex subset");
  Rational total = 0;
  for (std::size_t k : entering_arcs(graph, set)) total += z[k];
  for (std::size_t k : leaving_arcs(graph, set)) total -= z[k];
  return total;
}

DisjointPaths two_disjoint_paths(const DiGraph& graph, Vertex source, Vertex target) {
  const int n = graph.vertex_count();
  if (source < 0 || target < 0 || source >= n || target >= n) throw std::invalid_argument("vertex out of range");
  if (source == target) throw std::invalid_argument("two_disjoint_paths: s == t");
  if (graph.has_arc(source, target)) throw std::invalid_argument("two_disjoint_paths: (s,t) is an arc");

  // Vertex v becomes v_in = 2v and v_out = 2v+1 joined by a unit arc.
  MaxFlow flow(2 * static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    if (v != source && v != target) flow.add_arc(2 * v, 2 * v + 1, 1);
  std::vector<std::size_t> arc_ids(graph.arc_count());
  for (std::size_t k = 0; k < graph.arc_count(); ++k) {
    const Arc& a = graph.arcs()[k];
    arc_ids[k] = flow.add_arc(2 * a.tail + 1, 2 * a.head, 1);
  }
  const Rational value = flow.solve(2 * source + 1, 2 * target);

  DisjointPaths result;
  result.exists = value >= 2;
  if (!result.exists) return result;

  std::vector<bool> used(graph.arc_count(), false);
  auto extract = [&]() {
    std::vector<Vertex> path{source};
    Vertex v = source;
    while (v != target) {
      bool advanced = false;
      for (std::size_t k : graph.out_arcs(v)) {
        if (used[k] || flow.flow(arc_ids[k]) != 1) continue;
        used[k] = true;
        v = graph.arcs()[k].head;
        path.push_back(v);
        advanced = true;
        break;
      }
      if (!advanced) throw std::logic_error("two_disjoint_paths: broken flow decomposition");
    }
    return path;
  };
  auto first = extract();
  auto second = extract();
  result.paths = std::make_pair(std::move(first), std::move(second));
  return result;
}

namespace {

bool reaches(const std::vector<Vertex>& successor, Vertex from, Vertex to) {
  Vertex v = from;
  for (std::size_t steps = 0; steps <= successor.size(); ++steps) {
    if (v == to) return true;
    if (successor[v] < 0) return false;
    v = successor[v];
  }
  return false;
}

}  // namespace

std::vector<ArcSet> enumerate_branchings(const DiGraph& graph, const VertexSet& roots,
                                         std::optional<PathConstraint> via, bool include_cyclic) {
  const int n = graph.vertex_count();
  if (n > kBranchingVertexCap)
    throw std::length_error("enumerate_branchings: more than " + std::to_string(kBranchingVertexCap) + " vertices");
  if (roots.empty()) throw std::invalid_argument("enumerate_branchings: empty root set");

  std::vector<Vertex> free_vertices;
  for (Vertex v = 0; v < n; ++v)
    if (!contains(roots, v)) free_vertices.push_back(v);

  std::vector<Vertex> successor(n, -1);
  std::vector<std::size_t> chosen(n, 0);
  std::vector<ArcSet> result;

  std::function<void(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == free_vertices.size()) {
      if (via && !reaches(successor, via->from, via->to)) return;
      ArcSet arcs;
      for (Vertex v : free_vertices) arcs.push_back(graph.arcs()[chosen[v]]);
      std::sort(arcs.begin(), arcs.end());
      result.push_back(std::move(arcs));
      return;
    }
    const Vertex v = free_vertices[pos];
    for (std::size_t k : graph.out_arcs(v)) {
      const Vertex w = graph.arcs()[k].head;
      if (!include_cyclic && reaches(successor, w, v)) continue;
      successor[v] = w;
      chosen[v] = k;
      assign(pos + 1);
      successor[v] = -1;
    }
  };
  assign(0);
  std::sort(result.begin(), result.end());
  return result;
}

VertexSet arborescence_vertices(const DiGraph& graph, const ArcSet& branching, Vertex root) {
  std::vector<Vertex> successor(graph.vertex_count(), -1);
  for (const Arc& a : branching) successor[a.tail] = a.head;
  VertexSet out;
  for (Vertex v = 0; v < graph.vertex_count(); ++v)
    if (reaches(successor, v, root)) out.push_back(v);
  return out;
}

bool is_acyclic(const DiGraph& graph) {
  const ComponentStructure s = analyze_components(graph);
  return static_cast<int>(s.components.size()) == graph.vertex_count();
}

VertexSet Contraction::lift(const VertexSet& contracted) const {
  VertexSet out;
  for (Vertex v : contracted) out.insert(out.end(), old_of_new.at(v).begin(), old_of_new.at(v).end());
  return make_vertex_set(std::move(out));
}

VertexSet Contraction::project(const VertexSet& original) const {
  VertexSet out;
  for (Vertex v : original) out.push_back(new_of_old.at(v));
  return make_vertex_set(std::move(out));
}

Contraction contract_absorbing(const DiGraph& graph, const VertexSet& absorbing) {
  if (absorbing.empty()) throw std::invalid_argument("contract_absorbing: empty component");
  const ComponentStructure s = analyze_components(graph);
  const int comp = s.component_of.at(absorbing.front());
  if (s.components[comp] != absorbing)
    throw std::invalid_argument("contract_absorbing: set is not a strong component");
  if (!s.absorbing[comp]) throw std::invalid_argument("contract_absorbing: component is not absorbing");

  Contraction c;
  c.new_of_old.assign(graph.vertex_count(), -1);
  int next = 0;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (contains(absorbing, v)) {
      if (v == absorbing.front()) {
        c.sink = next++;
        c.old_of_new.push_back(absorbing);
      }
      c.new_of_old[v] = c.sink;
    } else {
      c.new_of_old[v] = next++;
      c.old_of_new.push_back({v});
    }
  }
  std::vector<Arc> arcs;
  for (const Arc& a : graph.arcs()) {
    const Arc mapped{c.new_of_old[a.tail], c.new_of_old[a.head]};
    if (mapped.tail != mapped.head) arcs.push_back(mapped);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  c.graph = DiGraph(next, std::move(arcs));
  return c;
}

}  // namespace dfone
