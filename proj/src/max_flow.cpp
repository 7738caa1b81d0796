#include "dfone/max_flow.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace dfone {

std::size_t MaxFlow::add_arc(std::size_t tail, std::size_t head, const Rational& capacity) {
  if (tail >= adjacency_.size() || head >= adjacency_.size()) throw std::out_of_range("MaxFlow::add_arc");
  if (capacity < 0) throw std::invalid_argument("MaxFlow::add_arc: negative capacity");
  const std::size_t index = edges_.size() / 2;
  adjacency_[tail].push_back(edges_.size());
  edges_.push_back({head, capacity, 0});
  adjacency_[head].push_back(edges_.size());
  edges_.push_back({tail, 0, 0});
  return index;
}

Rational MaxFlow::solve(std::size_t source, std::size_t sink) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  Rational total = 0;
  if (source == sink) return total;
  while (true) {
    std::vector<std::size_t> via(adjacency_.size(), kNone);
    std::vector<bool> seen(adjacency_.size(), false);
    std::deque<std::size_t> queue{source};
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      const std::size_t node = queue.front();
      queue.pop_front();
      for (std::size_t e : adjacency_[node]) {
        const Edge& edge = edges_[e];
        if (seen[edge.head] || edge.capacity - edge.flow <= 0) continue;
        seen[edge.head] = true;
        via[edge.head] = e;
        queue.push_back(edge.head);
      }
    }
    if (!seen[sink]) break;

    Rational bottleneck;
    bool first = true;
    for (std::size_t node = sink; node != source; node = edges_[via[node] ^ 1].head) {
      const Edge& edge = edges_[via[node]];
      Rational residual = edge.capacity - edge.flow;
      if (first || residual < bottleneck) bottleneck = residual;
      first = false;
    }
    for (std::size_t node = sink; node != source; node = edges_[via[node] ^ 1].head) {
      edges_[via[node]].flow += bottleneck;
      edges_[via[node] ^ 1].flow -= bottleneck;
    }
    total += bottleneck;
  }
  return total;
}

}  // namespace dfone
