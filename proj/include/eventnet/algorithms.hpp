#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eventnet/builders.hpp"
#include "eventnet/graph.hpp"

namespace eventnet {

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-9;  // L1 change between iterations
  int max_iter = 200;
};

struct PageRankResult {
  std::map<NodeKey, double> scores;  // sums to 1 within 1e-9 when converged
  bool converged = false;
  int iterations = 0;
};

// Power iteration on the weighted undirected graph: each edge acts as two
// arcs, transition probability proportional to edge weight over node
// strength; nodes with zero strength redistribute uniformly. Throws
// std::invalid_argument on an empty graph or bad options.
PageRankResult pagerank(const HeteroGraph& g, const PageRankOptions& options = {});

struct RankedEntry {
  std::string group;
  double score = 0.0;  // in [0, 1] after renormalization over groups

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

// Lethality ranking: PageRank over the casualty-weighted event--group graph,
// restricted to Group nodes and renormalized, top k with ties broken by
// label. Empty when no event is attributed. Throws ConfigError for k < 1.
std::vector<RankedEntry> top_k_lethal(std::span<const EventRecord> events, std::size_t k,
                                      const PageRankOptions& options = {});

// Node key -> community id, ids contiguous from 0 in sorted-key order of
// first appearance.
using Partition = std::map<NodeKey, int>;

// Greedy modularity maximization (local moves until no strictly positive
// gain, then aggregation, repeated). Deterministic: nodes are visited in
// sorted key order and ties keep the current community. Throws
// std::invalid_argument on an empty graph.
Partition detect_communities(const HeteroGraph& g);

// Weighted Newman modularity of the partition. Throws UndefinedMetricError
// on an edgeless graph and std::invalid_argument when the partition does not
// cover every node.
double modularity(const HeteroGraph& g, const Partition& p);

// Mean unweighted BFS distance over reachable unordered node pairs
// (disconnected pairs excluded). Throws UndefinedMetricError when the graph
// has fewer than 2 nodes or no reachable pair.
double average_path_length(const HeteroGraph& g);

struct MetricRow {
  TimeWindow window;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::optional<double> average_degree;
  std::optional<double> modularity_score;      // of the detected partition
  std::optional<double> average_path_length;   // reachable pairs only
};

// Builds the association graph per era and reports its structural metrics;
// empty eras yield rows with zero counts and absent metrics.
std::vector<MetricRow> era_metrics(std::span<const EventRecord> events, const EraSpec& eras);

}  // namespace eventnet
