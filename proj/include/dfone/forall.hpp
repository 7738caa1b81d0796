#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dfone/condition.hpp"
#include "dfone/digraph.hpp"
#include "dfone/netmodel.hpp"

namespace dfone {

// Every function here takes the original graph (l = t = 1, not strongly
// connected). C' is contracted internally; results use original vertex ids.

/// Tree parent; nullopt stands for the root C'.
using TreeParent = std::optional<Vertex>;

struct PostdomFamily {
  /// U(i) for i in C''.
  std::map<Vertex, VertexSet> U;
  /// Postdominator tree T over C'' ∪ {C'}.
  std::map<Vertex, TreeParent> parent;
  /// U(C''(j)) for every j in C''.
  std::map<Vertex, VertexSet> U_component;
  /// 𝒰(j) = union of U(j') over j' in C''(j), for j in J.
  std::map<Vertex, VertexSet> laminar;
  /// The tree 𝒯 built from {𝒰(j)} ∪ {C}.
  std::map<Vertex, TreeParent> laminar_parent;
  /// R_𝒯(j) and R_𝔗(j) over J.
  std::map<Vertex, VertexSet> reach_laminar;
  std::map<Vertex, VertexSet> reach_condensation;
};

PostdomFamily postdominators(const DiGraph& graph, const VertexSet& J);
PostdomFamily postdominators(const DiGraph& graph);

inline constexpr int kInarbCap = 16;

struct InarbFamily {
  std::vector<VertexSet> sets;
  /// I_U for every member U.
  std::map<VertexSet, VertexSet> partitions;
};

/// All nonempty U ⊆ C'' containing j whose vertices reach j inside U while
/// every other vertex of C'' reaches C' avoiding U. Throws std::length_error
/// when |C''| exceeds kInarbCap.
InarbFamily j_inarb_family(const DiGraph& graph, Vertex j);

struct WFamily {
  std::map<Vertex, VertexSet> W;
  VertexSet J;
  /// W(j) ⊆ C''(j) for j in J.
  std::map<Vertex, bool> inside;
};

/// W(j) via two internally disjoint paths into an auxiliary vertex fed by j and C'.
std::map<Vertex, VertexSet> w_sets(const DiGraph& graph);

/// Per non-absorbing component, the smallest vertex with an arc leaving the component.
VertexSet choose_J(const DiGraph& graph);

/// Every valid J; throws std::length_error past `limit` choices.
std::vector<VertexSet> valid_J_choices(const DiGraph& graph, std::size_t limit = 4096);

WFamily W_of(const DiGraph& graph, const VertexSet& J);
WFamily W_of(const DiGraph& graph);

struct ForallCondition {
  bool holds = false;
  std::vector<Condition> conditions;
};

/// h(U(i)) <= 0 for every i and h(U(C''(j))) < 0 for j in J with W(j) ⊆ C''(j).
/// A set listed under both relations keeps only the strict one.
ForallCondition forall_condition(const DiGraph& graph, const RationalVector& h, const VertexSet& J);
ForallCondition forall_condition(const DiGraph& graph, const RationalVector& h);

struct ForallFormulations {
  bool inarb = false;          // every family: all h(U) <= 0, some h(U) < 0
  bool postdom = false;        // U(i) / W(j) over all j in C''
  bool restricted = false;     // j in J only
  bool non_redundant = false;  // j in J with W(j) ⊆ C''(j)
  bool main_theorem = false;

  bool agree() const {
    return inarb == postdom && postdom == restricted && restricted == non_redundant && non_redundant == main_theorem;
  }
};

/// Evaluates every form; W(j) is taken from the I_U unions and checked
/// against the disjoint-path computation (std::logic_error on mismatch).
ForallFormulations forall_formulations(const DiGraph& graph, const RationalVector& h, const VertexSet& J);

/// The literal j-inarb statement.
bool forall_bruteforce(const DiGraph& graph, const RationalVector& h);

inline constexpr int kFalsifySteps = 12;

/// Rates with some ϑ'' coordinate <= 0, or nullopt when the forall condition
/// holds or the search budget runs out.
std::optional<ArcValues> falsify_kappa(const DiGraph& graph, const RationalVector& h);

}  // namespace dfone
