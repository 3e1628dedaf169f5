#include "eventnet/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "eventnet/errors.hpp"

namespace eventnet {

namespace {

// Compact weighted view with adjacency-matrix conventions: adj holds
// off-diagonal entries in both directions, self_weight holds A_ii (twice the
// loop weight, so strengths and 2W stay consistent under aggregation).
// Vertex order follows sorted node keys, which fixes iteration order
// everywhere downstream.
struct FlatGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;
  std::vector<double> self_weight;
  std::vector<double> strength;
  double total2 = 0.0;  // 2W

  void finish() {
    strength.assign(n, 0.0);
    for (std::size_t u = 0; u < n; ++u) {
      strength[u] = self_weight[u];
      for (const auto& [v, w] : adj[u]) strength[u] += w;
    }
    total2 = std::accumulate(strength.begin(), strength.end(), 0.0);
  }
};

FlatGraph flatten(const HeteroGraph& g, std::vector<NodeId>& order) {
  order = g.sorted_node_ids();
  std::vector<std::size_t> flat_of(g.node_count());
  for (std::size_t i = 0; i < order.size(); ++i) flat_of[order[i]] = i;

  FlatGraph fg;
  fg.n = g.node_count();
  fg.adj.resize(fg.n);
  fg.self_weight.assign(fg.n, 0.0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::map<std::size_t, double> merged;  // parallel kinds collapse
    for (const auto& entry : g.adjacency(order[i])) {
      merged[flat_of[entry.neighbor]] += g.edges()[entry.edge_index].weight;
    }
    fg.adj[i].assign(merged.begin(), merged.end());
  }
  fg.finish();
  return fg;
}

}  // namespace

PageRankResult pagerank(const HeteroGraph& g, const PageRankOptions& options) {
  if (g.empty()) throw std::invalid_argument("pagerank requires a non-empty graph");
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw std::invalid_argument("pagerank damping must lie in (0, 1)");
  }
  if (!(options.tol > 0.0)) throw std::invalid_argument("pagerank tol must be positive");
  if (options.max_iter < 1) throw std::invalid_argument("pagerank max_iter must be >= 1");

  std::vector<NodeId> order;
  FlatGraph fg = flatten(g, order);
  const std::size_t n = fg.n;
  const double d = options.damping;

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n, 0.0);

  PageRankResult result;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    double dangling = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (fg.strength[u] == 0.0) dangling += x[u];
    }
    double base = (1.0 - d) / static_cast<double>(n) +
                  d * dangling / static_cast<double>(n);
    std::fill(next.begin(), next.end(), base);
    for (std::size_t u = 0; u < n; ++u) {
      if (fg.strength[u] == 0.0) continue;
      double share = d * x[u] / fg.strength[u];
      for (const auto& [v, w] : fg.adj[u]) next[v] += share * w;
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change += std::abs(next[i] - x[i]);
    x.swap(next);
    result.iterations = iter;
    if (change < options.tol) {
      result.converged = true;
      break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) result.scores.emplace(g.node(order[i]).key, x[i]);
  return result;
}

std::vector<RankedEntry> top_k_lethal(std::span<const EventRecord> events, std::size_t k,
                                      const PageRankOptions& options) {
  if (k < 1) throw ConfigError("top-k requires k >= 1");
  HeteroGraph g = build_lethality_graph(events);
  if (g.empty()) return {};

  PageRankResult pr = pagerank(g, options);
  std::vector<RankedEntry> ranked;
  double group_mass = 0.0;
  for (const auto& [key, score] : pr.scores) {
    if (key.kind != NodeKind::Group) continue;
    ranked.push_back({key.label, score});
    group_mass += score;
  }
  if (group_mass > 0.0) {
    for (RankedEntry& r : ranked) r.score /= group_mass;
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.group < b.group;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

namespace {

// One Louvain level: local moves in vertex order until a full pass makes no
// move. comm is updated in place; returns whether anything moved.
bool louvain_level(const FlatGraph& fg, std::vector<int>& comm) {
  std::vector<double> tot(fg.n, 0.0);  // strength sum per community
  for (std::size_t u = 0; u < fg.n; ++u) tot[comm[u]] += fg.strength[u];

  bool any_move = false;
  bool moved = true;
  int passes = 0;
  while (moved && ++passes <= 100) {
    moved = false;
    for (std::size_t u = 0; u < fg.n; ++u) {
      const int old_comm = comm[u];
      std::map<int, double> weight_to;  // k_{u,c}, ordered for determinism
      weight_to[old_comm] = 0.0;
      for (const auto& [v, w] : fg.adj[u]) weight_to[comm[v]] += w;

      tot[old_comm] -= fg.strength[u];
      const double scale = fg.strength[u] / fg.total2;
      auto score_of = [&](int c) { return weight_to[c] - scale * tot[c]; };

      int best_comm = old_comm;
      double best_score = score_of(old_comm);
      for (const auto& [c, kw] : weight_to) {
        if (c == old_comm) continue;
        double score = kw - scale * tot[c];
        if (score > best_score) {
          best_score = score;
          best_comm = c;
        }
      }
      tot[best_comm] += fg.strength[u];
      if (best_comm != old_comm) {
        comm[u] = best_comm;
        moved = true;
        any_move = true;
      }
    }
  }
  return any_move;
}

// Relabels communities contiguously by first appearance in vertex order.
int renumber(std::vector<int>& comm) {
  std::map<int, int> relabel;
  for (int& c : comm) {
    auto [it, inserted] = relabel.emplace(c, static_cast<int>(relabel.size()));
    c = it->second;
  }
  return static_cast<int>(relabel.size());
}

FlatGraph aggregate(const FlatGraph& fg, const std::vector<int>& comm, int n_comm) {
  FlatGraph out;
  out.n = static_cast<std::size_t>(n_comm);
  out.adj.resize(out.n);
  out.self_weight.assign(out.n, 0.0);
  std::vector<std::map<std::size_t, double>> merged(out.n);
  for (std::size_t u = 0; u < fg.n; ++u) {
    auto cu = static_cast<std::size_t>(comm[u]);
    out.self_weight[cu] += fg.self_weight[u];
    for (const auto& [v, w] : fg.adj[u]) {
      auto cv = static_cast<std::size_t>(comm[v]);
      if (cu == cv) {
        out.self_weight[cu] += w;  // both directions land here once each
      } else {
        merged[cu][cv] += w;
      }
    }
  }
  for (std::size_t c = 0; c < out.n; ++c) out.adj[c].assign(merged[c].begin(), merged[c].end());
  out.finish();
  return out;
}

}  // namespace

Partition detect_communities(const HeteroGraph& g) {
  if (g.empty()) throw std::invalid_argument("community detection requires a non-empty graph");

  std::vector<NodeId> order;
  FlatGraph fg = flatten(g, order);

  // node -> community at the finest level, refined through aggregation
  std::vector<int> node_comm(fg.n);
  std::iota(node_comm.begin(), node_comm.end(), 0);

  if (fg.total2 > 0.0) {
    FlatGraph level = std::move(fg);
    std::vector<int> comm(level.n);
    std::iota(comm.begin(), comm.end(), 0);
    while (louvain_level(level, comm)) {
      int n_comm = renumber(comm);
      for (int& c : node_comm) c = comm[c];
      level = aggregate(level, comm, n_comm);
      comm.assign(level.n, 0);
      std::iota(comm.begin(), comm.end(), 0);
    }
  }

  renumber(node_comm);
  Partition partition;
  for (std::size_t i = 0; i < order.size(); ++i) {
    partition.emplace(g.node(order[i]).key, node_comm[i]);
  }
  return partition;
}

double modularity(const HeteroGraph& g, const Partition& p) {
  if (g.edge_count() == 0) {
    throw UndefinedMetricError("modularity is undefined on an edgeless graph");
  }
  std::map<int, double> intra;     // W_c
  std::map<int, double> strength;  // S_c
  double total = 0.0;              // W

  auto community_of = [&](NodeId id) {
    auto it = p.find(g.node(id).key);
    if (it == p.end()) {
      throw std::invalid_argument("partition does not cover node '" + g.node(id).key.label +
                                  "'");
    }
    return it->second;
  };

  for (NodeId id = 0; id < g.node_count(); ++id) {
    strength[community_of(id)] += g.node_strength(id);
  }
  for (const Edge& e : g.edges()) {
    total += e.weight;
    int ca = community_of(e.a);
    int cb = community_of(e.b);
    if (ca == cb) intra[ca] += e.weight;
  }

  double q = 0.0;
  for (const auto& [c, s] : strength) {
    double wc = intra.count(c) ? intra.at(c) : 0.0;
    double frac = s / (2.0 * total);
    q += wc / total - frac * frac;
  }
  return q;
}

double average_path_length(const HeteroGraph& g) {
  if (g.node_count() < 2) {
    throw UndefinedMetricError("average path length needs at least 2 nodes");
  }
  std::vector<NodeId> order;
  FlatGraph fg = flatten(g, order);

  long long pair_count = 0;
  long long distance_sum = 0;
  std::vector<int> dist(fg.n);
  std::deque<std::size_t> queue;
  for (std::size_t src = 0; src < fg.n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    queue.clear();
    queue.push_back(src);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& [v, w] : fg.adj[u]) {
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
    for (std::size_t v = src + 1; v < fg.n; ++v) {
      if (dist[v] > 0) {
        ++pair_count;
        distance_sum += dist[v];
      }
    }
  }
  if (pair_count == 0) {
    throw UndefinedMetricError("average path length is undefined: no reachable pair");
  }
  return static_cast<double>(distance_sum) / static_cast<double>(pair_count);
}

std::vector<MetricRow> era_metrics(std::span<const EventRecord> events, const EraSpec& eras) {
  validate_eras(eras);
  if (eras.windows.empty()) throw ConfigError("era metrics require at least one era");

  std::vector<MetricRow> rows;
  for (const TimeWindow& w : eras.windows) {
    MetricRow row;
    row.window = w;
    HeteroGraph g = build_association_graph(events, w);
    row.nodes = g.node_count();
    row.edges = g.edge_count();
    if (!g.empty()) {
      // A non-empty association graph always carries at least one edge, so
      // every metric below is defined.
      row.average_degree = degree_stats(g).average;
      row.modularity_score = modularity(g, detect_communities(g));
      row.average_path_length = average_path_length(g);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace eventnet
