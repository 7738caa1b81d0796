#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dfone/condition.hpp"
#include "dfone/digraph.hpp"
#include "dfone/steady.hpp"

namespace dfone {

struct TreeLikeStructure {
  /// The only vertex of C'' with an arc into C'.
  Vertex exit = 0;
  /// p(j) for j in C'' other than the exit.
  std::map<Vertex, Vertex> parent;
  /// U(j): vertices whose path to the exit passes through j.
  std::map<Vertex, VertexSet> descendants;
  /// Whether (p(j), j) is an arc.
  std::map<Vertex, bool> reverse_arc;
};

struct RecursionAnalysis {
  bool applies = false;
  std::optional<TreeLikeStructure> structure;
  std::optional<ThetaVector> theta;
  std::vector<Condition> exists_conditions;
  /// Includes the exists conditions.
  std::vector<Condition> forall_conditions;
  bool exists_holds = false;
  bool forall_holds = false;
};

/// Arcs j -> j-1 for every j >= 2 and j-1 -> j for every j >= 3, nothing else.
bool is_chain(const DiGraph& graph);

RecursionAnalysis chain_analysis(const DiGraph& graph, const RationalVector& h,
                                 const std::optional<ArcValues>& kappa = std::nullopt);

RecursionAnalysis tree_like_analysis(const DiGraph& graph, const RationalVector& h,
                                     const std::optional<ArcValues>& kappa = std::nullopt);

}  // namespace dfone
