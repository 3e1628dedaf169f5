#include "eventnet/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <tuple>

#include <json.hpp>

#include "eventnet/errors.hpp"

namespace eventnet {

namespace {

using nlohmann::json;

// Shortest round-trip decimal form, deterministic across runs.
std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

struct EdgeView {
  NodeKey a;
  NodeKey b;
  const Edge* edge;
};

std::vector<EdgeView> sorted_edges(const HeteroGraph& g) {
  std::vector<EdgeView> views;
  views.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    NodeKey ka = g.node(e.a).key;
    NodeKey kb = g.node(e.b).key;
    if (kb < ka) std::swap(ka, kb);
    views.push_back({std::move(ka), std::move(kb), &e});
  }
  std::sort(views.begin(), views.end(), [](const EdgeView& x, const EdgeView& y) {
    return std::tie(x.a, x.b, x.edge->kind) < std::tie(y.a, y.b, y.edge->kind);
  });
  return views;
}

json key_to_json(const NodeKey& k) {
  return json{{"kind", to_string(k.kind)}, {"label", k.label}};
}

NodeKey key_from_json(const json& obj) {
  if (!obj.is_object() || !obj.contains("kind") || !obj.contains("label")) {
    throw DataError("node key must be an object with 'kind' and 'label'");
  }
  return {node_kind_from_string(obj["kind"].get<std::string>()),
          obj["label"].get<std::string>()};
}

std::string escape_dot(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string dot_id(const NodeKey& k) {
  return std::string(to_string(k.kind)) + "|" + k.label;
}

}  // namespace

GraphFormat graph_format_from_string(std::string_view text) {
  if (text == "json") return GraphFormat::Json;
  if (text == "dot") return GraphFormat::Dot;
  if (text == "graphml") return GraphFormat::GraphMl;
  throw ConfigError("unknown graph format '" + std::string(text) +
                    "' (expected json, dot or graphml)");
}

std::string_view file_extension(GraphFormat format) {
  switch (format) {
    case GraphFormat::Json: return "json";
    case GraphFormat::Dot: return "dot";
    case GraphFormat::GraphMl: return "graphml";
  }
  return "";
}

std::string graph_to_json(const HeteroGraph& g) {
  json nodes = json::array();
  for (NodeId id : g.sorted_node_ids()) {
    const Node& n = g.node(id);
    json obj = key_to_json(n.key);
    if (!n.attributes.empty()) obj["attributes"] = n.attributes;
    nodes.push_back(std::move(obj));
  }
  json edges = json::array();
  for (const EdgeView& v : sorted_edges(g)) {
    json obj{{"a", key_to_json(v.a)},
             {"b", key_to_json(v.b)},
             {"kind", to_string(v.edge->kind)},
             {"weight", v.edge->weight}};
    if (v.edge->timestamp) obj["timestamp"] = format_date(*v.edge->timestamp);
    edges.push_back(std::move(obj));
  }
  json root{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  return root.dump(2) + "\n";
}

HeteroGraph graph_from_json(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid graph JSON: ") + ex.what());
  }
  if (!root.is_object() || !root.contains("nodes") || !root.contains("edges")) {
    throw DataError("graph JSON must be an object with 'nodes' and 'edges'");
  }
  HeteroGraph g;
  for (const json& obj : root["nodes"]) {
    NodeKey key = key_from_json(obj);
    NodeId id = g.upsert_node(key.kind, key.label);
    if (obj.contains("attributes")) {
      g.node(id).attributes = obj["attributes"].get<std::map<std::string, std::string>>();
    }
  }
  for (const json& obj : root["edges"]) {
    NodeKey ka = key_from_json(obj.at("a"));
    NodeKey kb = key_from_json(obj.at("b"));
    auto a = g.find_node(ka);
    auto b = g.find_node(kb);
    if (!a || !b) throw DataError("graph JSON edge references a missing node");
    std::optional<DateKey> ts;
    if (obj.contains("timestamp")) ts = parse_date(obj["timestamp"].get<std::string>());
    g.accumulate_edge(*a, *b, edge_kind_from_string(obj.at("kind").get<std::string>()),
                      obj.at("weight").get<double>(), ts);
  }
  return g;
}

void write_graph_json(std::ostream& out, const HeteroGraph& g) { out << graph_to_json(g); }

HeteroGraph read_graph_json(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return graph_from_json(text);
}

void write_graph_dot(std::ostream& out, const HeteroGraph& g) {
  out << "graph {\n";
  for (NodeId id : g.sorted_node_ids()) {
    const NodeKey& k = g.node(id).key;
    out << "  \"" << escape_dot(dot_id(k)) << "\" [kind=\"" << to_string(k.kind)
        << "\", label=\"" << escape_dot(k.label) << "\"];\n";
  }
  for (const EdgeView& v : sorted_edges(g)) {
    out << "  \"" << escape_dot(dot_id(v.a)) << "\" -- \"" << escape_dot(dot_id(v.b))
        << "\" [kind=\"" << to_string(v.edge->kind) << "\", weight="
        << format_weight(v.edge->weight) << "];\n";
  }
  out << "}\n";
}

void write_graph_graphml(std::ostream& out, const HeteroGraph& g) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"nk\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n"
      << "  <key id=\"nl\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"ek\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n"
      << "  <key id=\"ew\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
      << "  <key id=\"et\" for=\"edge\" attr.name=\"timestamp\" attr.type=\"string\"/>\n"
      << "  <graph edgedefault=\"undirected\">\n";
  auto ids = g.sorted_node_ids();
  std::vector<std::size_t> order(g.node_count());
  for (std::size_t i = 0; i < ids.size(); ++i) order[ids[i]] = i;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const NodeKey& k = g.node(ids[i]).key;
    out << "    <node id=\"n" << i << "\">"
        << "<data key=\"nk\">" << to_string(k.kind) << "</data>"
        << "<data key=\"nl\">" << escape_xml(k.label) << "</data>"
        << "</node>\n";
  }
  for (const EdgeView& v : sorted_edges(g)) {
    NodeId a = v.edge->a;
    NodeId b = v.edge->b;
    if (g.node(b).key < g.node(a).key) std::swap(a, b);
    out << "    <edge source=\"n" << order[a] << "\" target=\"n" << order[b] << "\">"
        << "<data key=\"ek\">" << to_string(v.edge->kind) << "</data>"
        << "<data key=\"ew\">" << format_weight(v.edge->weight) << "</data>";
    if (v.edge->timestamp) {
      out << "<data key=\"et\">" << format_date(*v.edge->timestamp) << "</data>";
    }
    out << "</edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_graph(std::ostream& out, const HeteroGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Json: write_graph_json(out, g); break;
    case GraphFormat::Dot: write_graph_dot(out, g); break;
    case GraphFormat::GraphMl: write_graph_graphml(out, g); break;
  }
}

}  // namespace eventnet
