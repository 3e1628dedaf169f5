#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "eventnet/graph.hpp"

namespace eventnet {

enum class GraphFormat { Json, Dot, GraphMl };

GraphFormat graph_format_from_string(std::string_view text);  // throws ConfigError
std::string_view file_extension(GraphFormat format);          // "json", "dot", "graphml"

// Canonical graph JSON: nodes sorted by key, edges sorted by
// (endpoint keys, kind) with endpoints in key order. Stable byte-for-byte
// for equal graphs, so it doubles as the golden-file format.
std::string graph_to_json(const HeteroGraph& g);
HeteroGraph graph_from_json(std::string_view json_text);

void write_graph_json(std::ostream& out, const HeteroGraph& g);
HeteroGraph read_graph_json(std::istream& in);

// Graphviz DOT, undirected; node kind and label as node attributes, weight
// and kind on edges.
void write_graph_dot(std::ostream& out, const HeteroGraph& g);

// GraphML with typed attribute keys.
void write_graph_graphml(std::ostream& out, const HeteroGraph& g);

void write_graph(std::ostream& out, const HeteroGraph& g, GraphFormat format);

}  // namespace eventnet
