#pragma once

#include <optional>
#include <vector>

#include "dfone/condition.hpp"
#include "dfone/digraph.hpp"
#include "dfone/netmodel.hpp"

namespace dfone {

struct FlowBounds {
  ArcValues lower;
  ArcValues upper;
};

/// An h-transshipment within the bounds, found by reducing the lower bounds
/// to a max-flow problem. nullopt when none exists.
std::optional<ArcValues> feasible_transshipment(const DiGraph& graph, const FlowBounds& bounds, const RationalVector& h);

inline constexpr int kHoffmanEnumerationCap = 20;

/// Checks c(in(U)) - d(out(U)) >= h(U) for every vertex subset U.
/// Throws std::length_error above kHoffmanEnumerationCap vertices.
bool hoffman_enumeration(const DiGraph& graph, const FlowBounds& bounds, const RationalVector& h);

/// Enumeration up to kHoffmanEnumerationCap vertices, flow construction beyond.
bool hoffman_feasible(const DiGraph& graph, const FlowBounds& bounds, const RationalVector& h);

struct PositiveTransshipment {
  bool exists = false;
  std::optional<ArcValues> witness;
  std::optional<Rational> epsilon;
  std::optional<Rational> k_bound;
  /// False when K is the coarse bound used above kHoffmanEnumerationCap vertices.
  bool k_exact = true;
  std::vector<Condition> conditions;
};

/// Requires a weakly connected graph and h(V) = 0.
PositiveTransshipment positive_transshipment(const DiGraph& graph, const RationalVector& h);

struct ExistsCondition {
  bool holds = false;
  std::vector<Condition> conditions;
  std::optional<ArcValues> witness_kappa;
};

/// h(U) < 0 on every closed set; the witness is the positive transshipment used as rates.
ExistsCondition exists_kappa_condition(const DiGraph& graph, const RationalVector& h);

}  // namespace dfone
