#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eventnet/dates.hpp"

namespace eventnet {

enum class NodeKind : std::uint8_t { Event, Group, WeaponType, AttackType, TargetType };
enum class EdgeKind : std::uint8_t {
  UsedWeapon,
  OfAttackType,
  Targeted,
  PerpetratedBy,
  AssociatedWith,
  Inflicted,
};

std::string_view to_string(NodeKind kind);
std::string_view to_string(EdgeKind kind);
NodeKind node_kind_from_string(std::string_view text);  // throws DataError
EdgeKind edge_kind_from_string(std::string_view text);  // throws DataError

// Node identity: kind plus exact canonical label (event id for Event nodes).
struct NodeKey {
  NodeKind kind{};
  std::string label;

  friend auto operator<=>(const NodeKey&, const NodeKey&) = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    return std::hash<std::string>()(k.label) * 31u + static_cast<std::size_t>(k.kind);
  }
};

using NodeId = std::uint32_t;

struct Node {
  NodeKey key;
  std::map<std::string, std::string> attributes;  // optional, rarely used
};

// Undirected edge with canonical endpoint order a <= b (by node id).
// At most one edge exists per (endpoints, kind); repeated construction
// accumulates weight.
struct Edge {
  NodeId a = 0;
  NodeId b = 0;
  EdgeKind kind{};
  double weight = 0.0;
  std::optional<DateKey> timestamp;  // earliest accumulation wins
};

// Typed heterogeneous property graph. Single-writer during construction,
// immutable and freely shareable afterwards.
class HeteroGraph {
 public:
  struct AdjEntry {
    NodeId neighbor;
    std::uint32_t edge_index;
  };

  // Idempotent: returns the existing id when (kind, label) is present.
  // Throws std::invalid_argument on an empty label.
  NodeId upsert_node(NodeKind kind, std::string_view label);

  // Adds delta_weight (> 0) to the (a, b, kind) edge, creating it at
  // delta_weight when absent; keeps the earliest timestamp seen. Returns the
  // updated weight. Throws std::invalid_argument on self-loops, unknown
  // endpoints or non-positive deltas.
  double accumulate_edge(NodeId a, NodeId b, EdgeKind kind, double delta_weight,
                         std::optional<DateKey> timestamp = std::nullopt);

  std::optional<NodeId> find_node(const NodeKey& key) const;
  const Node& node(NodeId id) const { return nodes_[id]; }
  Node& node(NodeId id) { return nodes_[id]; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<AdjEntry>& adjacency(NodeId id) const { return adjacency_[id]; }

  const Edge* find_edge(NodeId a, NodeId b, EdgeKind kind) const;

  // Number of incident edges / sum of incident edge weights.
  std::size_t node_degree(NodeId id) const { return adjacency_[id].size(); }
  double node_strength(NodeId id) const;

  // Node ids ordered by key; the deterministic iteration order used by
  // serializers and algorithms.
  std::vector<NodeId> sorted_node_ids() const;

 private:
  struct EdgeRef {
    std::uint64_t pair;
    EdgeKind kind;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  };
  struct EdgeRefHash {
    std::size_t operator()(const EdgeRef& r) const {
      return std::hash<std::uint64_t>()(r.pair * 8u + static_cast<std::uint64_t>(r.kind));
    }
  };

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<AdjEntry>> adjacency_;
  std::unordered_map<NodeKey, NodeId, NodeKeyHash> node_index_;
  std::unordered_map<EdgeRef, std::uint32_t, EdgeRefHash> edge_index_;
};

// Keeps edges whose timestamp lies inside w (untimestamped edges drop) and
// the nodes incident to at least one kept edge. Throws ConfigError when the
// window is inverted.
HeteroGraph window_subgraph(const HeteroGraph& g, const TimeWindow& w);

// Projects a bipartite graph onto its `keep` side: projected edge (u, v)
// exists iff u and v share at least one `via` neighbor, weighted by the
// number of shared neighbors. All keep-kind nodes are carried over. Throws
// std::invalid_argument when g has an edge not joining keep to via.
HeteroGraph bipartite_projection(const HeteroGraph& g, NodeKind keep, NodeKind via);

struct DegreeStats {
  double average = 0.0;  // 2|E| / |V|, 0 for the empty graph
  std::map<NodeKey, std::size_t> by_node;
};

DegreeStats degree_stats(const HeteroGraph& g);

// Equality as used by tests: same node key sets and same (endpoints, kind)
// edge set with weights within weight_tol. Timestamps are not compared.
bool graphs_equal(const HeteroGraph& a, const HeteroGraph& b, double weight_tol = 1e-9);

}  // namespace eventnet
