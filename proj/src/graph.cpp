#include "eventnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "eventnet/errors.hpp"

namespace eventnet {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Event: return "Event";
    case NodeKind::Group: return "Group";
    case NodeKind::WeaponType: return "WeaponType";
    case NodeKind::AttackType: return "AttackType";
    case NodeKind::TargetType: return "TargetType";
  }
  return "?";
}

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::UsedWeapon: return "UsedWeapon";
    case EdgeKind::OfAttackType: return "OfAttackType";
    case EdgeKind::Targeted: return "Targeted";
    case EdgeKind::PerpetratedBy: return "PerpetratedBy";
    case EdgeKind::AssociatedWith: return "AssociatedWith";
    case EdgeKind::Inflicted: return "Inflicted";
  }
  return "?";
}

NodeKind node_kind_from_string(std::string_view text) {
  if (text == "Event") return NodeKind::Event;
  if (text == "Group") return NodeKind::Group;
  if (text == "WeaponType") return NodeKind::WeaponType;
  if (text == "AttackType") return NodeKind::AttackType;
  if (text == "TargetType") return NodeKind::TargetType;
  throw DataError("unknown node kind '" + std::string(text) + "'");
}

EdgeKind edge_kind_from_string(std::string_view text) {
  if (text == "UsedWeapon") return EdgeKind::UsedWeapon;
  if (text == "OfAttackType") return EdgeKind::OfAttackType;
  if (text == "Targeted") return EdgeKind::Targeted;
  if (text == "PerpetratedBy") return EdgeKind::PerpetratedBy;
  if (text == "AssociatedWith") return EdgeKind::AssociatedWith;
  if (text == "Inflicted") return EdgeKind::Inflicted;
  throw DataError("unknown edge kind '" + std::string(text) + "'");
}

NodeId HeteroGraph::upsert_node(NodeKind kind, std::string_view label) {
  if (label.empty()) throw std::invalid_argument("node label must be non-empty");
  NodeKey key{kind, std::string(label)};
  auto it = node_index_.find(key);
  if (it != node_index_.end()) return it->second;
  NodeId id = static_cast<NodeId>(nodes_.size());
  node_index_.emplace(key, id);
  nodes_.push_back(Node{std::move(key), {}});
  adjacency_.emplace_back();
  return id;
}

double HeteroGraph::accumulate_edge(NodeId a, NodeId b, EdgeKind kind, double delta_weight,
                                    std::optional<DateKey> timestamp) {
  if (a >= nodes_.size() || b >= nodes_.size()) {
    throw std::invalid_argument("edge endpoint does not exist");
  }
  if (a == b) {
    throw std::invalid_argument("self-loop on node '" + nodes_[a].key.label + "'");
  }
  if (!(delta_weight > 0.0)) {
    throw std::invalid_argument("edge weight delta must be positive");
  }
  NodeId lo = std::min(a, b);
  NodeId hi = std::max(a, b);
  EdgeRef ref{(static_cast<std::uint64_t>(lo) << 32) | hi, kind};
  auto it = edge_index_.find(ref);
  if (it != edge_index_.end()) {
    Edge& e = edges_[it->second];
    e.weight += delta_weight;
    if (timestamp && (!e.timestamp || *timestamp < *e.timestamp)) e.timestamp = timestamp;
    return e.weight;
  }
  auto idx = static_cast<std::uint32_t>(edges_.size());
  edges_.push_back(Edge{lo, hi, kind, delta_weight, timestamp});
  edge_index_.emplace(ref, idx);
  adjacency_[lo].push_back({hi, idx});
  adjacency_[hi].push_back({lo, idx});
  return delta_weight;
}

std::optional<NodeId> HeteroGraph::find_node(const NodeKey& key) const {
  auto it = node_index_.find(key);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

const Edge* HeteroGraph::find_edge(NodeId a, NodeId b, EdgeKind kind) const {
  NodeId lo = std::min(a, b);
  NodeId hi = std::max(a, b);
  EdgeRef ref{(static_cast<std::uint64_t>(lo) << 32) | hi, kind};
  auto it = edge_index_.find(ref);
  if (it == edge_index_.end()) return nullptr;
  return &edges_[it->second];
}

double HeteroGraph::node_strength(NodeId id) const {
  double s = 0.0;
  for (const AdjEntry& e : adjacency_[id]) s += edges_[e.edge_index].weight;
  return s;
}

std::vector<NodeId> HeteroGraph::sorted_node_ids() const {
  std::vector<NodeId> ids(nodes_.size());
  for (NodeId i = 0; i < ids.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(),
            [this](NodeId x, NodeId y) { return nodes_[x].key < nodes_[y].key; });
  return ids;
}

HeteroGraph window_subgraph(const HeteroGraph& g, const TimeWindow& w) {
  validate_window(w);
  HeteroGraph out;
  for (const Edge& e : g.edges()) {
    if (!e.timestamp || !w.contains(*e.timestamp)) continue;
    const NodeKey& ka = g.node(e.a).key;
    const NodeKey& kb = g.node(e.b).key;
    NodeId a = out.upsert_node(ka.kind, ka.label);
    NodeId b = out.upsert_node(kb.kind, kb.label);
    out.accumulate_edge(a, b, e.kind, e.weight, e.timestamp);
  }
  return out;
}

HeteroGraph bipartite_projection(const HeteroGraph& g, NodeKind keep, NodeKind via) {
  for (const Edge& e : g.edges()) {
    NodeKind ka = g.node(e.a).key.kind;
    NodeKind kb = g.node(e.b).key.kind;
    bool across = (ka == keep && kb == via) || (ka == via && kb == keep);
    if (!across) {
      throw std::invalid_argument("graph is not bipartite over " +
                                  std::string(to_string(keep)) + "/" +
                                  std::string(to_string(via)) + ": edge " +
                                  g.node(e.a).key.label + " -- " + g.node(e.b).key.label);
    }
  }

  HeteroGraph out;
  // Carry every keep-side node so isolated ones survive the projection.
  for (NodeId id : g.sorted_node_ids()) {
    if (g.node(id).key.kind == keep) out.upsert_node(keep, g.node(id).key.label);
  }
  for (NodeId hub : g.sorted_node_ids()) {
    if (g.node(hub).key.kind != via) continue;
    std::set<NodeKey> members;
    for (const auto& adj : g.adjacency(hub)) members.insert(g.node(adj.neighbor).key);
    for (auto it = members.begin(); it != members.end(); ++it) {
      for (auto jt = std::next(it); jt != members.end(); ++jt) {
        NodeId u = *out.find_node(*it);
        NodeId v = *out.find_node(*jt);
        out.accumulate_edge(u, v, EdgeKind::AssociatedWith, 1.0);
      }
    }
  }
  return out;
}

DegreeStats degree_stats(const HeteroGraph& g) {
  DegreeStats stats;
  for (NodeId id = 0; id < g.node_count(); ++id) {
    stats.by_node.emplace(g.node(id).key, g.node_degree(id));
  }
  if (g.node_count() > 0) {
    stats.average = 2.0 * static_cast<double>(g.edge_count()) /
                    static_cast<double>(g.node_count());
  }
  return stats;
}

namespace {

// (key(a), key(b), kind) with endpoints in key order, for order-free comparison.
std::vector<std::tuple<NodeKey, NodeKey, EdgeKind, double>> canonical_edges(
    const HeteroGraph& g) {
  std::vector<std::tuple<NodeKey, NodeKey, EdgeKind, double>> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    NodeKey ka = g.node(e.a).key;
    NodeKey kb = g.node(e.b).key;
    if (kb < ka) std::swap(ka, kb);
    out.emplace_back(std::move(ka), std::move(kb), e.kind, e.weight);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool graphs_equal(const HeteroGraph& a, const HeteroGraph& b, double weight_tol) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  auto ids_a = a.sorted_node_ids();
  auto ids_b = b.sorted_node_ids();
  for (std::size_t i = 0; i < ids_a.size(); ++i) {
    if (a.node(ids_a[i]).key != b.node(ids_b[i]).key) return false;
  }
  auto ea = canonical_edges(a);
  auto eb = canonical_edges(b);
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (std::get<0>(ea[i]) != std::get<0>(eb[i]) || std::get<1>(ea[i]) != std::get<1>(eb[i]) ||
        std::get<2>(ea[i]) != std::get<2>(eb[i])) {
      return false;
    }
    if (std::abs(std::get<3>(ea[i]) - std::get<3>(eb[i])) > weight_tol) return false;
  }
  return true;
}

}  // namespace eventnet
