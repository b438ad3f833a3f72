#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fishcheck/graph.hpp"

namespace fishcheck {

/// graph6 encoding (no ">>graph6<<" header); supports n < 258048.
std::string to_graph6(const Graph& g);
/// Throws std::invalid_argument on malformed input.
Graph from_graph6(std::string_view text);

/// {"n": .., "adjacency": [[..], ..], "roles": [..]} with sorted neighbour lists.
nlohmann::json to_json(const Graph& g);
/// Accepts the to_json layout; "roles" is optional.
Graph graph_from_json(const nlohmann::json& j);

}  // namespace fishcheck
