#pragma once

#include <string>
#include <vector>

#include "dfone/digraph.hpp"
#include "dfone/rational.hpp"

namespace dfone {

enum class Relation { Negative, NonPositive };

/// h(set) < 0 or h(set) <= 0, evaluated for a particular h.
struct Condition {
  VertexSet set;
  Relation relation = Relation::Negative;
  Rational value;
  bool satisfied = false;

  friend bool operator==(const Condition&, const Condition&) = default;
};

inline Condition make_condition(VertexSet set, Relation relation, const RationalVector& h) {
  Condition c{std::move(set), relation, 0, false};
  c.value = sum_over(h, c.set);
  c.satisfied = relation == Relation::Negative ? c.value < 0 : c.value <= 0;
  return c;
}

inline bool all_satisfied(const std::vector<Condition>& conditions) {
  for (const auto& c : conditions)
    if (!c.satisfied) return false;
  return true;
}

inline const char* relation_symbol(Relation r) { return r == Relation::Negative ? "<" : "<="; }

/// `h({3,4}) <= 0`
inline std::string format_condition(const Condition& c) {
  return "h(" + format_set(c.set) + ") " + relation_symbol(c.relation) + " 0";
}

}  // namespace dfone
