#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dfone/classify.hpp"

namespace dfone {

nlohmann::json condition_json(const Condition& condition);
nlohmann::json rates_json(const DiGraph& graph, const std::optional<ArcValues>& rates);

/// Keys: instance, classification, exists_conditions, forall_conditions,
/// witness_kappa, falsifier_kappa, oracle. Vertex ids are 1-based.
nlohmann::json report_json(const Analysis& analysis, const std::optional<OracleReport>& oracle = std::nullopt);

/// Same content as report_json, one fact per line.
std::string report_text(const Analysis& analysis, const std::optional<OracleReport>& oracle = std::nullopt);

}  // namespace dfone
