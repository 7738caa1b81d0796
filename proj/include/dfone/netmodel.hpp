#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dfone/digraph.hpp"
#include "dfone/linalg.hpp"
#include "dfone/rational.hpp"

namespace dfone {

/// Rate coefficient per reaction arc.
using RateAssignment = std::map<Arc, Rational>;

struct ReactionNetwork {
  std::vector<std::string> species;
  /// complexes[i][s] is the coefficient of species s in complex i.
  std::vector<std::vector<long>> complexes;
  std::vector<Arc> reactions;
  /// Rates given in the file, if any (empty or complete).
  RateAssignment rates;

  int complex_count() const { return static_cast<int>(complexes.size()); }
  int species_count() const { return static_cast<int>(species.size()); }
  DiGraph graph() const { return DiGraph(complex_count(), reactions); }
  /// The n x c matrix B.
  RationalMatrix complex_matrix() const;

  friend bool operator==(const ReactionNetwork&, const ReactionNetwork&) = default;
};

struct GraphHInstance {
  DiGraph graph;
  RationalVector h;
  RateAssignment rates;

  friend bool operator==(const GraphHInstance&, const GraphHInstance&) = default;
};

enum class InputMode { Network, GraphH };

using Instance = std::variant<ReactionNetwork, GraphHInstance>;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Guesses the mode from the first keyword. Throws ParseError on empty input.
InputMode detect_mode(std::string_view text);

Instance parse_inputs(std::string_view text, InputMode mode);
Instance parse_inputs(std::string_view text);
ReactionNetwork parse_network(std::string_view text);
GraphHInstance parse_graph_h(std::string_view text);

std::string serialize(const ReactionNetwork& net);
std::string serialize(const GraphHInstance& instance);

/// Rates as ArcValues aligned with graph.arcs(). Throws std::invalid_argument
/// on missing, extra or non-positive entries.
ArcValues rate_values(const DiGraph& graph, const RateAssignment& kappa);
RateAssignment rate_assignment(const DiGraph& graph, const ArcValues& values);
ArcValues unit_rates(const DiGraph& graph);

/// Entry (j,i) is kappa_ij; diagonal (i,i) is minus the outflow rate of i.
RationalMatrix build_kinetic_matrix(const DiGraph& graph, const ArcValues& kappa);
RationalMatrix build_kinetic_matrix(const DiGraph& graph, const RateAssignment& kappa);

struct MassActionValue {
  RationalVector theta;
  RationalVector f;
};

MassActionValue eval_massaction(const ReactionNetwork& net, const RateAssignment& kappa, const RationalVector& x);

}  // namespace dfone
