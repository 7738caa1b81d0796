#include "dfone/report.hpp"

#include <sstream>

namespace dfone {

namespace {

nlohmann::json ids(const VertexSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : set) out.push_back(v + 1);
  return out;
}

nlohmann::json oracle_json(const std::optional<OracleReport>& oracle) {
  if (!oracle) return nullptr;
  return {{"applicable", oracle->applicable},
          {"samples", oracle->samples},
          {"seed", oracle->seed},
          {"positive_samples", oracle->positive},
          {"witness_verified", oracle->witness_verified},
          {"falsifier_verified", oracle->falsifier_verified},
          {"consistent", oracle->consistent},
          {"problems", oracle->problems}};
}

void text_conditions(std::ostringstream& os, const char* title, const std::vector<Condition>& conditions) {
  os << title << ":\n";
  if (conditions.empty()) os << "  (none)\n";
  for (const auto& c : conditions)
    os << "  " << format_condition(c) << "  value " << to_string(c.value) << "  " << (c.satisfied ? "satisfied" : "violated")
       << '\n';
}

void text_rates(std::ostringstream& os, const char* title, const DiGraph& graph, const std::optional<ArcValues>& rates) {
  os << title << ":";
  if (!rates) {
    os << " none\n";
    return;
  }
  os << '\n';
  for (std::size_t k = 0; k < graph.arc_count(); ++k) os << "  " << format_arc(graph.arcs()[k]) << ' ' << to_string((*rates)[k]) << '\n';
}

}  // namespace

nlohmann::json condition_json(const Condition& c) {
  return {{"set", ids(c.set)},
          {"relation", relation_symbol(c.relation)},
          {"value", to_string(c.value)},
          {"satisfied", c.satisfied}};
}

nlohmann::json rates_json(const DiGraph& graph, const std::optional<ArcValues>& rates) {
  if (!rates) return nullptr;
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < graph.arc_count(); ++k)
    out.push_back({{"arc", format_arc(graph.arcs()[k])}, {"rate", to_string((*rates)[k])}});
  return out;
}

nlohmann::json report_json(const Analysis& a, const std::optional<OracleReport>& oracle) {
  nlohmann::json instance;
  instance["mode"] = a.mode == InputMode::Network ? "network" : "graph_h";
  instance["species"] = a.species_count >= 0 ? nlohmann::json(a.species_count) : nlohmann::json(nullptr);
  instance["complexes"] = a.graph.vertex_count();
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& arc : a.graph.arcs()) arcs.push_back(format_arc(arc));
  instance["arcs"] = arcs;
  instance["linkage_classes"] = a.deficiency.linkage_classes;
  instance["terminal_classes"] = a.deficiency.terminal_classes;
  instance["deficiency"] = a.deficiency.delta;
  instance["deficiency_assumed"] = a.deficiency_assumed;
  instance["c_prime"] = ids(a.split.c_prime);
  instance["c_double"] = ids(a.split.c_double);
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& comp : a.components.components) comps.push_back(ids(comp));
  instance["strong_components"] = comps;
  if (a.h) {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& q : *a.h) h.push_back(to_string(q));
    instance["h"] = h;
  } else {
    instance["h"] = nullptr;
  }

  nlohmann::json exists = nlohmann::json::array(), forall = nlohmann::json::array();
  for (const auto& c : a.classification.exists_conditions) exists.push_back(condition_json(c));
  for (const auto& c : a.classification.forall_conditions) forall.push_back(condition_json(c));

  return {{"instance", instance},
          {"classification", {{"verdict", verdict_name(a.classification.verdict)}, {"notes", a.classification.notes}}},
          {"exists_conditions", exists},
          {"forall_conditions", forall},
          {"witness_kappa", rates_json(a.graph, a.classification.witness_kappa)},
          {"falsifier_kappa", rates_json(a.graph, a.classification.falsifier_kappa)},
          {"oracle", oracle_json(oracle)}};
}

std::string report_text(const Analysis& a, const std::optional<OracleReport>& oracle) {
  std::ostringstream os;
  os << "mode: " << (a.mode == InputMode::Network ? "network" : "graph_h") << '\n';
  if (a.species_count >= 0) os << "species: " << a.species_count << '\n';
  os << "complexes: " << a.graph.vertex_count() << '\n';
  os << "arcs:";
  for (const Arc& arc : a.graph.arcs()) os << ' ' << format_arc(arc);
  os << '\n';
  os << "linkage classes: " << a.deficiency.linkage_classes << ", terminal classes: " << a.deficiency.terminal_classes << '\n';
  os << "deficiency: " << a.deficiency.delta << (a.deficiency_assumed ? " (assumed)" : "") << '\n';
  os << "C': " << format_set(a.split.c_prime) << "  C'': " << format_set(a.split.c_double) << '\n';
  os << "strong components:";
  for (const auto& comp : a.components.components) os << ' ' << format_set(comp);
  os << '\n';
  if (a.h) {
    os << "h:";
    for (const auto& q : *a.h) os << ' ' << to_string(q);
    os << '\n';
  }
  os << "verdict: " << verdict_name(a.classification.verdict) << '\n';
  for (const auto& note : a.classification.notes) os << "note: " << note << '\n';
  text_conditions(os, "exists conditions", a.classification.exists_conditions);
  text_conditions(os, "forall conditions", a.classification.forall_conditions);
  text_rates(os, "witness kappa", a.graph, a.classification.witness_kappa);
  text_rates(os, "falsifier kappa", a.graph, a.classification.falsifier_kappa);
  if (oracle) {
    os << "oracle: ";
    if (!oracle->applicable) {
      os << "not applicable\n";
    } else {
      os << oracle->positive << "/" << oracle->samples << " samples positive (seed " << oracle->seed << ")"
         << ", witness " << (oracle->witness_verified ? "verified" : "unverified") << ", falsifier "
         << (oracle->falsifier_verified ? "verified" : "unverified") << ", "
         << (oracle->consistent ? "consistent" : "INCONSISTENT") << '\n';
      for (const auto& p : oracle->problems) os << "  problem: " << p << '\n';
    }
  }
  return os.str();
}

}  // namespace dfone
