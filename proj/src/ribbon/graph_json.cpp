#include "moduli/ribbon/graph_json.hpp"

#include "moduli/errors.hpp"

namespace moduli::ribbon {

nlohmann::json graph_to_json(const RibbonGraph& graph) {
    return {{"v", kGraphSchemaVersion},
            {"half_edges", graph.half_edge_count()},
            {"s0", graph.s0_permutation()},
            {"s1", graph.s1_permutation()},
            {"face_labels", graph.face_labels()}};
}

RibbonGraph graph_from_json(const nlohmann::json& j) {
    try {
        if (j.at("v").get<int>() != kGraphSchemaVersion) throw InvalidGraphError("unsupported graph schema version");
        auto s0 = j.at("s0").get<std::vector<int>>();
        auto s1 = j.at("s1").get<std::vector<int>>();
        auto labels = j.at("face_labels").get<std::vector<int>>();
        if (j.at("half_edges").get<int>() != static_cast<int>(s0.size()))
            throw InvalidGraphError("half_edges does not match the permutation length");
        return RibbonGraph(std::move(s0), std::move(s1), std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidGraphError(std::string("malformed graph JSON: ") + e.what());
    }
}

}  // namespace moduli::ribbon
