#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dfone/rational.hpp"

namespace dfone {

// Vertices are 0-based internally; file formats and reports use 1-based ids.
using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;
/// Sorted, duplicate-free list of arcs.
using ArcSet = std::vector<Arc>;
/// One value per arc, aligned with DiGraph::arcs().
using ArcValues = std::vector<Rational>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);
bool contains(const VertexSet& set, Vertex v);
bool is_subset(const VertexSet& inner, const VertexSet& outer);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);
Rational sum_over(const RationalVector& values, const VertexSet& set);

/// `{3,4}` using 1-based ids.
std::string format_set(const VertexSet& set);
/// `4->3` using 1-based ids.
std::string format_arc(const Arc& arc);

/// Simple directed graph: no self-loops, no parallel arcs.
class DiGraph {
 public:
  DiGraph() = default;
  /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
  DiGraph(int vertex_count, std::vector<Arc> arcs);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  std::optional<std::size_t> arc_index(const Arc& arc) const;
  bool has_arc(Vertex tail, Vertex head) const { return arc_index({tail, head}).has_value(); }

  /// Indices into arcs() of the arcs leaving / entering `v`.
  const std::vector<std::size_t>& out_arcs(Vertex v) const { return out_[v]; }
  const std::vector<std::size_t>& in_arcs(Vertex v) const { return in_[v]; }

  VertexSet all_vertices() const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arcs_ == b.arcs_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

struct ComponentStructure {
  /// Strong components, each sorted; ordered by smallest member.
  std::vector<VertexSet> components;
  std::vector<int> component_of;
  int weak_count = 0;
  std::vector<bool> absorbing;
  std::vector<int> absorbing_components;
  /// Acyclic graph over component indices.
  DiGraph condensation;

  int terminal_count() const { return static_cast<int>(absorbing_components.size()); }
  bool strongly_connected() const { return components.size() == 1; }
};

ComponentStructure analyze_components(const DiGraph& graph);

/// Vertices with a directed path into `targets` (targets included).
VertexSet reach_set(const DiGraph& graph, const VertexSet& targets);
VertexSet reach_set(const DiGraph& graph, Vertex target);

/// Vertices reachable from `sources` (sources included).
VertexSet forward_set(const DiGraph& graph, const VertexSet& sources);

/// Every nonempty proper vertex set without entering arcs, sorted by size then
/// lexicographically. Enumerated over predecessor-closed unions of strong
/// components; throws std::length_error beyond 20 non-absorbing components.
std::vector<VertexSet> closed_sets(const DiGraph& graph);

std::vector<std::size_t> entering_arcs(const DiGraph& graph, const VertexSet& set);
std::vector<std::size_t> leaving_arcs(const DiGraph& graph, const VertexSet& set);

/// z(arcs entering U) - z(arcs leaving U).
Rational excess_of(const DiGraph& graph, const ArcValues& z, const VertexSet& set);

struct DisjointPaths {
  bool exists = false;
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> paths;
};

/// Two s->t paths sharing only s and t, found by unit vertex-capacity max flow.
/// Requires s != t and (s,t) not an arc.
DisjointPaths two_disjoint_paths(const DiGraph& graph, Vertex source, Vertex target);

struct PathConstraint {
  Vertex from = 0;
  Vertex to = 0;
};

inline constexpr int kBranchingVertexCap = 16;

/// U-branchings: roots have no chosen out-arc, every other vertex exactly one,
/// and the chosen arcs are acyclic. With `include_cyclic` the acyclicity
/// requirement is dropped. With `via`, only arc sets containing a path
/// from->to are kept. Throws std::length_error above kBranchingVertexCap vertices.
std::vector<ArcSet> enumerate_branchings(const DiGraph& graph, const VertexSet& roots,
                                         std::optional<PathConstraint> via = std::nullopt,
                                         bool include_cyclic = false);

/// Vertices whose chain of chosen arcs ends in `root`.
VertexSet arborescence_vertices(const DiGraph& graph, const ArcSet& branching, Vertex root);

bool is_acyclic(const DiGraph& graph);

struct Contraction {
  DiGraph graph;
  Vertex sink = 0;
  std::vector<Vertex> new_of_old;
  std::vector<VertexSet> old_of_new;

  VertexSet lift(const VertexSet& contracted) const;
  VertexSet project(const VertexSet& original) const;
};

/// Replaces the absorbing strong component by a single vertex placed at the
/// position of its smallest member; parallel arcs are merged.
Contraction contract_absorbing(const DiGraph& graph, const VertexSet& absorbing);

}  // namespace dfone
