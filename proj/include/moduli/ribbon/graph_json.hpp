#pragma once

#include "moduli/ribbon/ribbon_graph.hpp"

#include <json.hpp>

namespace moduli::ribbon {

inline constexpr int kGraphSchemaVersion = 1;

nlohmann::json graph_to_json(const RibbonGraph& graph);
// Validates the schema version and all graph invariants.
RibbonGraph graph_from_json(const nlohmann::json& j);

}  // namespace moduli::ribbon
