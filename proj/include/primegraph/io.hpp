#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>
#include "primegraph/coloring.hpp"
#include "primegraph/graph.hpp"

namespace pg {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"vertices": [...], "complement_edges": [[u,v],...]}. A plain "edges" key is
// read as complement edges when as_complement is set and as prime-graph edges
// otherwise; "complement_edges" is always the complement.
Graph parse_graph_json(std::string_view text, bool as_complement = true);

// One "u v" pair per line, or a single id to declare an isolated vertex.
// '#' starts a comment. Vertex order is first appearance.
Graph parse_edge_list(std::string_view text, bool as_complement = true);

// Picks the format from the first non-blank character ('{' means JSON).
Graph parse_graph(std::string_view text, bool as_complement = true);
Graph read_graph_file(const std::string& path, bool as_complement = true);
std::string read_text_file(const std::string& path);

json graph_to_json(const Graph& g);
std::string graph_to_edge_list(const Graph& g);

json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

}  // namespace pg
