#pragma once

#include <string>

#include <json.hpp>

#include "skelgraph/graph.hpp"
#include "skelgraph/order.hpp"

namespace skelgraph {

/// Canonical interchange forms. Vertices/elements are sorted by label and
/// pair lists lexicographically, so equal objects serialize to identical
/// bytes.
///
/// Graph JSON: { "vertices": [labels], "edges": [[i,j],...] } with i < j.
/// Poset JSON: { "elements": [labels], "leq": [[i,j],...] } listing every
/// related pair (i <= j), reflexive ones included.

nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::ordered_json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

/// dump() plus a trailing newline; byte-stable for golden files.
std::string canonical_bytes(const nlohmann::ordered_json& j);

/// Presentation-only DOT. Graphs render undirected; posets render as the
/// Hasse diagram, bottom-up.
std::string graph_to_dot(const Graph& g, const std::string& name);
std::string poset_to_dot(const Poset& p, const std::string& name);

} // namespace skelgraph
