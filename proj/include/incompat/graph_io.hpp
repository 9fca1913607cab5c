#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>

#include "incompat/graph.hpp"

namespace incompat {

/** Text format: "n m" followed by m lines "u v". */
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

/** JSON format: {"n": .., "edges": [[u,v],..], "meta": {..}}. */
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/** Reads either format, deciding by the first non-blank character. */
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

}  // namespace incompat
