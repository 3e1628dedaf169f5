// Shared deterministic fixture generators for unit and acceptance tests.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "eventnet/events.hpp"
#include "eventnet/graph.hpp"

namespace support {

using Rng = std::mt19937;

// Zero-padded so label order always matches index order.
inline std::string group_label(std::size_t i) {
  return "Group " + std::string(i < 10 ? "0" : "") + std::to_string(i);
}

// Random weighted Group-kind graph on up to max_nodes labeled vertices.
// Returns the graph plus its (u, v, w) triples over sorted-key vertex
// indices; isolated vertices appear naturally.
struct RandomGraph {
  eventnet::HeteroGraph graph;
  std::size_t n = 0;
  std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
};

inline RandomGraph random_weighted_graph(Rng& rng, std::size_t max_nodes = 10) {
  RandomGraph out;
  std::uniform_int_distribution<std::size_t> n_dist(2, max_nodes);
  out.n = n_dist(rng);
  for (std::size_t i = 0; i < out.n; ++i) {
    out.graph.upsert_node(eventnet::NodeKind::Group, group_label(i));
  }
  std::uniform_real_distribution<double> edge_p(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.1, 5.0);
  for (std::size_t i = 0; i < out.n; ++i) {
    for (std::size_t j = i + 1; j < out.n; ++j) {
      if (edge_p(rng) < 0.45) {
        double w = weight(rng);
        out.graph.accumulate_edge(static_cast<eventnet::NodeId>(i),
                                  static_cast<eventnet::NodeId>(j),
                                  eventnet::EdgeKind::AssociatedWith, w);
        out.edges.emplace_back(i, j, w);
      }
    }
  }
  // Single-letter labels sort like ids, so flat indices equal graph ids here.
  return out;
}

// Random event fixture: up to max_events events over a small group pool,
// spread across 1988..2017 with unknown dates/casualties mixed in.
inline std::vector<eventnet::EventRecord> random_events(Rng& rng, std::size_t max_events = 100,
                                                        std::size_t group_pool = 10) {
  std::uniform_int_distribution<std::size_t> count_dist(1, max_events);
  std::size_t n = count_dist(rng);
  std::uniform_int_distribution<int> year(1988, 2017);
  std::uniform_int_distribution<int> month(0, 12);
  std::uniform_int_distribution<std::size_t> n_groups(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, group_pool - 1);
  std::uniform_int_distribution<int> cas(-1, 40);

  std::vector<eventnet::EventRecord> events;
  for (std::size_t i = 0; i < n; ++i) {
    eventnet::EventRecord e;
    e.event_id = "E" + std::to_string(100000 + i);
    e.year = year(rng);
    int m = month(rng);
    if (m > 0) e.month = m;
    e.country = "Testland";
    e.region = "Test Region";
    std::size_t k = n_groups(rng);
    while (e.groups.size() < k) {
      std::string name = group_label(pick(rng));
      if (std::find(e.groups.begin(), e.groups.end(), name) == e.groups.end()) {
        e.groups.push_back(name);
      }
    }
    e.attack_types = {"Bombing"};
    e.target_types = {"Infrastructure"};
    e.weapon_types = {"Explosives"};
    int killed = cas(rng);
    if (killed >= 0) e.killed = killed;
    int wounded = cas(rng);
    if (wounded >= 0) e.wounded = wounded;
    events.push_back(std::move(e));
  }
  return events;
}

}  // namespace support
