#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "eqg/graph.hpp"

namespace eqg {

/// Graphviz DOT: vertices in index order, edges lexicographic.
std::string to_dot(const LabeledGraph& g, const std::string& name = "G");

/// {"vertices": [labels], "edges": [[i, j], ...], "metadata": {...}} with i < j sorted.
/// The metadata key is omitted when `metadata` is null.
nlohmann::ordered_json to_json(const LabeledGraph& g, const nlohmann::ordered_json& metadata = nullptr);

/// Inverse of to_json; vertex i gets element index i. Throws SpecError on malformed input.
LabeledGraph graph_from_json(const nlohmann::json& doc);

}  // namespace eqg
