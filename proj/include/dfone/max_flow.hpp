#pragma once

#include <cstddef>
#include <vector>

#include "dfone/rational.hpp"

namespace dfone {

/// Shortest-augmenting-path (Edmonds-Karp) max flow with exact rational capacities.
/// Terminates after O(VE) augmentations regardless of the capacity values.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t node_count) : adjacency_(node_count) {}

  std::size_t node_count() const { return adjacency_.size(); }

  /// Returns the index of the new arc; `flow(index)` reads its flow after `solve`.
  std::size_t add_arc(std::size_t tail, std::size_t head, const Rational& capacity);

  Rational solve(std::size_t source, std::size_t sink);

  const Rational& flow(std::size_t arc) const { return edges_[2 * arc].flow; }
  std::size_t tail(std::size_t arc) const { return edges_[2 * arc + 1].head; }
  std::size_t head(std::size_t arc) const { return edges_[2 * arc].head; }

 private:
  struct Edge {
    std::size_t head;
    Rational capacity;
    Rational flow;
  };
  std::vector<Edge> edges_;  // edge 2k is arc k, edge 2k+1 its residual twin
  std::vector<std::vector<std::size_t>> adjacency_;
};

}  // namespace dfone
