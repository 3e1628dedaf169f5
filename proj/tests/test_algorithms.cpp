#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "eventnet/algorithms.hpp"
#include "eventnet/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace eventnet;

namespace {

HeteroGraph graph_from_edges(std::size_t n,
                             const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges) {
  HeteroGraph g;
  for (std::size_t i = 0; i < n; ++i) g.upsert_node(NodeKind::Group, support::group_label(i));
  for (const auto& [u, v, w] : edges) {
    g.accumulate_edge(static_cast<NodeId>(u), static_cast<NodeId>(v),
                      EdgeKind::AssociatedWith, w);
  }
  return g;
}

EventRecord lethal_event(const std::string& id, std::vector<std::string> groups,
                         std::int64_t killed) {
  EventRecord e;
  e.event_id = id;
  e.year = 2000;
  e.groups = std::move(groups);
  e.killed = killed;
  return e;
}

// Community label sets, independent of community numbering.
std::set<std::set<std::string>> community_sets(const Partition& p) {
  std::map<int, std::set<std::string>> by_comm;
  for (const auto& [key, c] : p) by_comm[c].insert(key.label);
  std::set<std::set<std::string>> out;
  for (auto& [c, members] : by_comm) out.insert(members);
  return out;
}

}  // namespace

TEST_CASE("pagerank on a single edge splits evenly") {
  HeteroGraph g = graph_from_edges(2, {{0, 1, 1.0}});
  auto result = pagerank(g);
  CHECK(result.converged);
  CHECK(result.scores.at({NodeKind::Group, support::group_label(0)}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(result.scores.at({NodeKind::Group, support::group_label(1)}) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pagerank on regular graphs is uniform") {
  std::vector<std::tuple<std::size_t, std::size_t, double>> ring;
  for (std::size_t i = 0; i < 6; ++i) ring.emplace_back(i, (i + 1) % 6, 1.0);
  auto scores = pagerank(graph_from_edges(6, ring)).scores;
  for (const auto& [key, score] : scores) CHECK(score == doctest::Approx(1.0 / 6).epsilon(1e-9));

  std::vector<std::tuple<std::size_t, std::size_t, double>> clique;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) clique.emplace_back(i, j, 1.0);
  }
  scores = pagerank(graph_from_edges(5, clique)).scores;
  for (const auto& [key, score] : scores) CHECK(score == doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("pagerank on a 5-node weighted fixture matches the dense oracle") {
  std::vector<std::tuple<std::size_t, std::size_t, double>> edges{
      {0, 1, 3.0}, {0, 2, 1.0}, {1, 2, 0.5}, {2, 3, 2.0}, {3, 4, 4.0},
  };
  HeteroGraph g = graph_from_edges(5, edges);
  PageRankOptions opts;
  opts.tol = 1e-12;
  opts.max_iter = 1000;
  auto result = pagerank(g, opts);
  auto expected = oracles::dense_pagerank(5, edges, opts.damping, opts.tol, opts.max_iter);
  for (std::size_t i = 0; i < 5; ++i) {
    double got = result.scores.at({NodeKind::Group, support::group_label(i)});
    CHECK(std::abs(got - expected[i]) < 1e-8);
  }
}

TEST_CASE("pagerank matches the dense oracle on random graphs") {
  support::Rng rng(61);
  PageRankOptions opts;
  opts.tol = 1e-12;
  opts.max_iter = 2000;
  for (int round = 0; round < 25; ++round) {
    auto fixture = support::random_weighted_graph(rng);
    auto result = pagerank(fixture.graph, opts);
    auto expected =
        oracles::dense_pagerank(fixture.n, fixture.edges, opts.damping, opts.tol, opts.max_iter);
    for (std::size_t i = 0; i < fixture.n; ++i) {
      double got = result.scores.at({NodeKind::Group, support::group_label(i)});
      CHECK(std::abs(got - expected[i]) < 1e-8);
    }
  }
}

TEST_CASE("pagerank scores sum to one") {
  support::Rng rng(67);
  for (int round = 0; round < 10; ++round) {
    auto fixture = support::random_weighted_graph(rng);
    auto result = pagerank(fixture.graph);
    double sum = 0.0;
    for (const auto& [key, score] : result.scores) sum += score;
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
}

TEST_CASE("pagerank is invariant under uniform weight scaling") {
  support::Rng rng(71);
  for (int round = 0; round < 10; ++round) {
    auto fixture = support::random_weighted_graph(rng);
    HeteroGraph scaled;
    for (std::size_t i = 0; i < fixture.n; ++i) {
      scaled.upsert_node(NodeKind::Group, support::group_label(i));
    }
    for (const auto& [u, v, w] : fixture.edges) {
      scaled.accumulate_edge(static_cast<NodeId>(u), static_cast<NodeId>(v),
                             EdgeKind::AssociatedWith, w * 1000.0);
    }
    auto base = pagerank(fixture.graph).scores;
    auto after = pagerank(scaled).scores;
    for (const auto& [key, score] : base) CHECK(std::abs(after.at(key) - score) < 1e-8);
  }
}

TEST_CASE("pagerank flags non-convergence and rejects bad input") {
  HeteroGraph g = graph_from_edges(3, {{0, 1, 1.0}, {1, 2, 5.0}});
  PageRankOptions strict;
  strict.tol = 1e-15;
  strict.max_iter = 2;
  auto result = pagerank(g, strict);
  CHECK(!result.converged);
  CHECK(result.iterations == 2);
  double sum = 0.0;
  for (const auto& [key, score] : result.scores) sum += score;
  CHECK(std::abs(sum - 1.0) < 1e-9);

  CHECK_THROWS_AS(pagerank(HeteroGraph{}), std::invalid_argument);
  PageRankOptions bad;
  bad.damping = 1.0;
  CHECK_THROWS_AS(pagerank(g, bad), std::invalid_argument);
}

TEST_CASE("pagerank handles dangling nodes") {
  HeteroGraph g = graph_from_edges(3, {{0, 1, 1.0}});  // node 2 isolated
  auto result = pagerank(g);
  CHECK(result.converged);
  double sum = 0.0;
  for (const auto& [key, score] : result.scores) sum += score;
  CHECK(std::abs(sum - 1.0) < 1e-9);
  CHECK(result.scores.at({NodeKind::Group, support::group_label(2)}) > 0.0);
}

TEST_CASE("a single attributed event ranks its group at 1.0") {
  auto ranked = top_k_lethal(std::vector<EventRecord>{lethal_event("E1", {"A"}, 5)}, 3);
  REQUIRE(ranked.size() == 1);
  CHECK(ranked[0].group == "A");
  CHECK(ranked[0].score == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("higher-casualty group outranks on a shared-hub fixture") {
  std::vector<EventRecord> events{
      lethal_event("EA", {"A"}, 99),
      lethal_event("EB", {"B"}, 9),
      lethal_event("ES", {"A", "B"}, 1),  // shared hub; A totals 10x B
  };
  auto ranked = top_k_lethal(events, 2);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].group == "A");
  CHECK(ranked[1].group == "B");
  CHECK(ranked[0].score > ranked[1].score);

  // Cross-check the ordering against the dense oracle on the same graph.
  // Sorted keys: Event EA, EB, ES then Group A, B -> indices 0..4.
  std::vector<std::tuple<std::size_t, std::size_t, double>> edges{
      {0, 3, 99.0}, {1, 4, 9.0}, {2, 3, 1.0}, {2, 4, 1.0},
  };
  auto oracle = oracles::dense_pagerank(5, edges, 0.85, 1e-12, 2000);
  CHECK(oracle[3] > oracle[4]);
}

TEST_CASE("k beyond the group count clamps to the full list") {
  std::vector<EventRecord> events{lethal_event("E1", {"A"}, 5), lethal_event("E2", {"B"}, 3)};
  CHECK(top_k_lethal(events, 10).size() == 2);
}

TEST_CASE("no attributed events yields an empty ranking") {
  std::vector<EventRecord> events{lethal_event("E1", {}, 5)};
  CHECK(top_k_lethal(events, 5).empty());
}

TEST_CASE("ranking order is invariant under uniform casualty scaling") {
  support::Rng rng(73);
  for (int round = 0; round < 10; ++round) {
    auto events = support::random_events(rng, 60);
    auto scaled = events;
    for (auto& e : scaled) {
      if (e.killed) e.killed = *e.killed * 7;
      if (e.wounded) e.wounded = *e.wounded * 7;
    }
    auto base = top_k_lethal(events, 100);
    auto after = top_k_lethal(scaled, 100);
    REQUIRE(base.size() == after.size());
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(base[i].group == after[i].group);
  }
}

TEST_CASE("two disjoint triangles split into the two triangle communities") {
  HeteroGraph g = graph_from_edges(
      6, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}});
  Partition p = detect_communities(g);
  auto sets = community_sets(p);
  std::set<std::set<std::string>> expected{
      {support::group_label(0), support::group_label(1), support::group_label(2)},
      {support::group_label(3), support::group_label(4), support::group_label(5)}};
  CHECK(sets == expected);
  CHECK(modularity(g, p) == doctest::Approx(0.5).epsilon(1e-12));

  // Exhaustive search over all 203 partitions of 6 nodes confirms this is
  // the modularity optimum.
  auto ids = g.sorted_node_ids();
  double best = -1.0;
  for (const auto& rgs : oracles::all_partitions(6)) {
    Partition candidate;
    for (std::size_t i = 0; i < 6; ++i) candidate[g.node(ids[i]).key] = rgs[i];
    best = std::max(best, modularity(g, candidate));
  }
  CHECK(modularity(g, p) == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("a single edge collapses into one community") {
  HeteroGraph g = graph_from_edges(2, {{0, 1, 1.0}});
  Partition p = detect_communities(g);
  CHECK(community_sets(p).size() == 1);
  CHECK(modularity(g, p) == 0.0);
}

TEST_CASE("a clique is one community") {
  std::vector<std::tuple<std::size_t, std::size_t, double>> clique;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) clique.emplace_back(i, j, 1.0);
  }
  Partition p = detect_communities(graph_from_edges(5, clique));
  CHECK(community_sets(p).size() == 1);
}

TEST_CASE("community ids are contiguous from zero") {
  HeteroGraph g = graph_from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  Partition p = detect_communities(g);
  std::set<int> ids;
  for (const auto& [key, c] : p) ids.insert(c);
  CHECK(ids == std::set<int>{0, 1});
}

TEST_CASE("community detection is deterministic") {
  support::Rng rng(79);
  auto fixture = support::random_weighted_graph(rng);
  Partition first = detect_communities(fixture.graph);
  for (int i = 0; i < 10; ++i) CHECK(detect_communities(fixture.graph) == first);
  CHECK_THROWS_AS(detect_communities(HeteroGraph{}), std::invalid_argument);
}

TEST_CASE("detected communities never score below the single community") {
  support::Rng rng(83);
  for (int round = 0; round < 10; ++round) {
    auto fixture = support::random_weighted_graph(rng);
    if (fixture.graph.edge_count() == 0) continue;
    Partition detected = detect_communities(fixture.graph);
    Partition single;
    for (const auto& n : fixture.graph.nodes()) single[n.key] = 0;
    CHECK(modularity(fixture.graph, single) == 0.0);
    CHECK(modularity(fixture.graph, detected) >= 0.0);
  }
}

TEST_CASE("whole graph as one community has zero modularity") {
  HeteroGraph g = graph_from_edges(4, {{0, 1, 2.0}, {1, 2, 1.0}, {2, 3, 0.5}});
  Partition p;
  for (const auto& n : g.nodes()) p[n.key] = 0;
  CHECK(modularity(g, p) == 0.0);
}

TEST_CASE("two disjoint cliques under the clique partition score exactly one half") {
  for (std::size_t k : {3u, 4u, 5u}) {
    std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        edges.emplace_back(i, j, 1.0);
        edges.emplace_back(k + i, k + j, 1.0);
      }
    }
    HeteroGraph g = graph_from_edges(2 * k, edges);
    Partition p;
    for (std::size_t i = 0; i < 2 * k; ++i) {
      p[{NodeKind::Group, support::group_label(i)}] = i < k ? 0 : 1;
    }
    CHECK(modularity(g, p) == 0.5);
  }
}

TEST_CASE("modularity matches the pairwise oracle on random partitions") {
  support::Rng rng(89);
  std::uniform_int_distribution<int> comm(0, 3);
  for (int round = 0; round < 20; ++round) {
    auto fixture = support::random_weighted_graph(rng);
    if (fixture.graph.edge_count() == 0) continue;
    Partition p;
    for (const auto& n : fixture.graph.nodes()) p[n.key] = comm(rng);
    CHECK(std::abs(modularity(fixture.graph, p) -
                   oracles::pairwise_modularity(fixture.graph, p)) < 1e-12);
  }
}

TEST_CASE("modularity rejects edgeless graphs and partial partitions") {
  HeteroGraph edgeless;
  edgeless.upsert_node(NodeKind::Group, "A");
  CHECK_THROWS_AS(modularity(edgeless, Partition{}), UndefinedMetricError);

  HeteroGraph g = graph_from_edges(2, {{0, 1, 1.0}});
  Partition partial;
  partial[{NodeKind::Group, support::group_label(0)}] = 0;
  CHECK_THROWS_AS(modularity(g, partial), std::invalid_argument);
}

TEST_CASE("average path length on small shapes") {
  HeteroGraph path = graph_from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  CHECK(average_path_length(path) == doctest::Approx(4.0 / 3).epsilon(1e-15));

  std::vector<std::tuple<std::size_t, std::size_t, double>> clique;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) clique.emplace_back(i, j, 1.0);
  }
  CHECK(average_path_length(graph_from_edges(4, clique)) == 1.0);

  HeteroGraph disjoint = graph_from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK(average_path_length(disjoint) == 1.0);
}

TEST_CASE("average path length errors on degenerate graphs") {
  HeteroGraph one;
  one.upsert_node(NodeKind::Group, "A");
  CHECK_THROWS_AS(average_path_length(one), UndefinedMetricError);

  HeteroGraph isolated;
  isolated.upsert_node(NodeKind::Group, "A");
  isolated.upsert_node(NodeKind::Group, "B");
  CHECK_THROWS_AS(average_path_length(isolated), UndefinedMetricError);
}

TEST_CASE("average path length equals Floyd-Warshall exactly") {
  support::Rng rng(97);
  for (int round = 0; round < 15; ++round) {
    auto fixture = support::random_weighted_graph(rng, 30);
    if (fixture.graph.edge_count() == 0) continue;
    CHECK(average_path_length(fixture.graph) == oracles::floyd_warshall_apl(fixture.graph));
  }
}

namespace {

EventRecord pair_event(const std::string& id, int year, const std::string& a,
                       const std::string& b) {
  EventRecord e;
  e.event_id = id;
  e.year = year;
  e.groups = {a, b};
  return e;
}

}  // namespace

TEST_CASE("era metrics report per-window structure") {
  std::vector<EventRecord> events;
  // Era 1: five disjoint pairs -> 10 nodes, 5 edges, average degree 1.0.
  for (int i = 0; i < 5; ++i) {
    events.push_back(pair_event("A" + std::to_string(i), 1995,
                                support::group_label(2 * i), support::group_label(2 * i + 1)));
  }
  // Era 2: nothing multi-group.
  EventRecord solo;
  solo.event_id = "S1";
  solo.year = 2005;
  solo.groups = {"Group 00"};
  events.push_back(solo);
  // Era 3: a 4-ring -> 4 nodes, 4 edges, average degree 2.0.
  for (int i = 0; i < 4; ++i) {
    events.push_back(pair_event("C" + std::to_string(i), 2015, support::group_label(i),
                                support::group_label((i + 1) % 4)));
  }

  EraSpec eras{{TimeWindow::years(1990, 2000), TimeWindow::years(2001, 2010),
                TimeWindow::years(2011, 2017)}};
  auto rows = era_metrics(events, eras);
  REQUIRE(rows.size() == 3);

  CHECK(rows[0].nodes == 10);
  CHECK(rows[0].edges == 5);
  CHECK(rows[0].average_degree == 1.0);
  CHECK(rows[0].modularity_score.has_value());
  CHECK(rows[0].average_path_length == 1.0);

  CHECK(rows[1].nodes == 0);
  CHECK(!rows[1].average_degree.has_value());
  CHECK(!rows[1].modularity_score.has_value());
  CHECK(!rows[1].average_path_length.has_value());

  CHECK(rows[2].nodes == 4);
  CHECK(rows[2].edges == 4);
  CHECK(rows[2].average_degree == 2.0);
}

TEST_CASE("denser co-attribution per era raises average degree monotonically") {
  std::vector<EventRecord> events;
  for (int i = 0; i < 5; ++i) {  // era 1: avg degree 1.0
    events.push_back(pair_event("A" + std::to_string(i), 1995,
                                support::group_label(2 * i), support::group_label(2 * i + 1)));
  }
  for (int i = 0; i < 10; ++i) {  // era 2: 10-ring, avg degree 2.0
    events.push_back(pair_event("B" + std::to_string(i), 2005, support::group_label(i),
                                support::group_label((i + 1) % 10)));
  }
  for (int i = 0; i < 8; ++i) {  // era 3: 8-ring plus 2 chords, avg degree 2.5
    events.push_back(pair_event("C" + std::to_string(i), 2015, support::group_label(i),
                                support::group_label((i + 1) % 8)));
  }
  events.push_back(pair_event("C8", 2015, support::group_label(0), support::group_label(4)));
  events.push_back(pair_event("C9", 2015, support::group_label(2), support::group_label(6)));

  EraSpec eras{{TimeWindow::years(1990, 2000), TimeWindow::years(2001, 2010),
                TimeWindow::years(2011, 2017)}};
  auto rows = era_metrics(events, eras);
  REQUIRE(rows.size() == 3);
  CHECK(*rows[0].average_degree < *rows[1].average_degree);
  CHECK(*rows[1].average_degree < *rows[2].average_degree);
  CHECK(*rows[0].average_degree == 1.0);
  CHECK(*rows[1].average_degree == 2.0);
  CHECK(*rows[2].average_degree == 2.5);
}
