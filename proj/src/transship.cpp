#include "dfone/transship.hpp"

#include <algorithm>
#include <stdexcept>

#include "dfone/max_flow.hpp"
#include "dfone/steady.hpp"

namespace dfone {

namespace {

void require_balanced(const DiGraph& graph, const RationalVector& h) {
  if (static_cast<int>(h.size()) != graph.vertex_count()) throw std::invalid_argument("h has the wrong length");
  if (sum(h) != 0) throw std::invalid_argument("h(V) must be zero");
}

void require_bounds(const DiGraph& graph, const FlowBounds& bounds) {
  if (bounds.lower.size() != graph.arc_count() || bounds.upper.size() != graph.arc_count())
    throw std::invalid_argument("bounds must cover every arc");
}

}  // namespace

std::optional<ArcValues> feasible_transshipment(const DiGraph& graph, const FlowBounds& bounds, const RationalVector& h) {
  require_balanced(graph, h);
  require_bounds(graph, bounds);
  const std::size_t m = graph.arc_count();
  for (std::size_t k = 0; k < m; ++k)
    if (bounds.lower[k] > bounds.upper[k]) return std::nullopt;

  // z = d + y with 0 <= y <= c - d and excess_y(v) = h(v) - excess_d(v).
  const int n = graph.vertex_count();
  RationalVector b(h);
  for (std::size_t k = 0; k < m; ++k) {
    const Arc& a = graph.arcs()[k];
    b[a.head] -= bounds.lower[k];
    b[a.tail] += bounds.lower[k];
  }
  const std::size_t source = n, sink = n + 1;
  MaxFlow flow(n + 2);
  for (std::size_t k = 0; k < m; ++k)
    flow.add_arc(graph.arcs()[k].tail, graph.arcs()[k].head, bounds.upper[k] - bounds.lower[k]);
  Rational demand = 0;
  for (int v = 0; v < n; ++v) {
    if (b[v] < 0) flow.add_arc(source, v, -b[v]);
    if (b[v] > 0) {
      flow.add_arc(v, sink, b[v]);
      demand += b[v];
    }
  }
  if (flow.solve(source, sink) != demand) return std::nullopt;
  ArcValues z(m);
  for (std::size_t k = 0; k < m; ++k) z[k] = bounds.lower[k] + flow.flow(k);
  return z;
}

bool hoffman_enumeration(const DiGraph& graph, const FlowBounds& bounds, const RationalVector& h) {
  require_balanced(graph, h);
  require_bounds(graph, bounds);
  const int n = graph.vertex_count();
  if (n > kHoffmanEnumerationCap) throw std::length_error("hoffman_enumeration: too many vertices");
  for (std::size_t k = 0; k < graph.arc_count(); ++k)
    if (bounds.lower[k] > bounds.upper[k]) return false;
  for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << n); ++mask) {
    Rational lhs = 0, hu = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1U) hu += h[v];
    for (std::size_t k = 0; k < graph.arc_count(); ++k) {
      const bool tail_in = mask >> graph.arcs()[k].tail & 1U;
      const bool head_in = mask >> graph.arcs()[k].head & 1U;
      if (!tail_in && head_in) lhs += bounds.upper[k];
      if (tail_in && !head_in) lhs -= bounds.lower[k];
    }
    if (lhs < hu) return false;
  }
  return true;
}

bool hoffman_feasible(const DiGraph& graph, const FlowBounds& bounds, const RationalVector& h) {
  if (graph.vertex_count() <= kHoffmanEnumerationCap) return hoffman_enumeration(graph, bounds, h);
  return feasible_transshipment(graph, bounds, h).has_value();
}

PositiveTransshipment positive_transshipment(const DiGraph& graph, const RationalVector& h) {
  require_balanced(graph, h);
  if (analyze_components(graph).weak_count != 1) throw std::invalid_argument("graph must be weakly connected");

  PositiveTransshipment out;
  Rational epsilon = 1;
  for (const VertexSet& u : closed_sets(graph)) {
    out.conditions.push_back(make_condition(u, Relation::Negative, h));
    const Rational ratio = -out.conditions.back().value / static_cast<long>(leaving_arcs(graph, u).size());
    epsilon = std::min(epsilon, ratio);
  }
  out.exists = all_satisfied(out.conditions);
  if (!out.exists) return out;

  const int n = graph.vertex_count();
  Rational k_bound = epsilon;
  if (n <= kHoffmanEnumerationCap) {
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << n); ++mask) {
      long in = 0, leaving = 0;
      Rational hu = 0;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1U) hu += h[v];
      for (const Arc& a : graph.arcs()) {
        const bool tail_in = mask >> a.tail & 1U;
        const bool head_in = mask >> a.head & 1U;
        if (!tail_in && head_in) ++in;
        if (tail_in && !head_in) ++leaving;
      }
      if (in > 0) k_bound = std::max(k_bound, Rational((hu + epsilon * leaving) / in));
    }
  } else {
    Rational positive = 0;
    for (const auto& q : h)
      if (q > 0) positive += q;
    k_bound = std::max(epsilon, Rational(positive + epsilon * static_cast<long>(graph.arc_count())));
    out.k_exact = false;
  }
  out.epsilon = epsilon;
  out.k_bound = k_bound;

  const FlowBounds bounds{ArcValues(graph.arc_count(), epsilon), ArcValues(graph.arc_count(), k_bound)};
  out.witness = feasible_transshipment(graph, bounds, h);
  if (!out.witness) throw std::logic_error("positive_transshipment: construction failed although the condition holds");
  for (int v = 0; v < n; ++v)
    if (excess_of(graph, *out.witness, {v}) != h[v]) throw std::logic_error("positive_transshipment: wrong excess");
  return out;
}

ExistsCondition exists_kappa_condition(const DiGraph& graph, const RationalVector& h) {
  const AbsorbingSplit split = split_absorbing(graph);
  if (split.c_double.empty()) throw UnsupportedNetwork("graph is strongly connected");
  const PositiveTransshipment pt = positive_transshipment(graph, h);
  ExistsCondition out;
  out.holds = pt.exists;
  out.conditions = pt.conditions;
  out.witness_kappa = pt.witness;
  return out;
}

}  // namespace dfone
