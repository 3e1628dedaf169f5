#pragma once

#include <map>
#include <string>
#include <vector>

#include "eventnet/algorithms.hpp"
#include "eventnet/builders.hpp"

namespace eventnet {

// CSV with one row per era window; undefined metrics render as empty cells.
// Column order is fixed; the path-length column name records that the metric
// averages over reachable pairs only.
std::string metrics_to_csv(const std::vector<MetricRow>& rows);

// window,group_a,group_b,count — sorted as produced by count_temporal_dyads.
std::string dyads_to_csv(const std::vector<DyadCount>& dyads);

// year,count ascending.
std::string yearly_to_csv(const std::map<int, std::size_t>& counts);

// Ordered JSON array of {group, score}.
std::string ranking_to_json(const std::vector<RankedEntry>& ranking);

// {"modularity": Q-or-null, "communities": {label: id, ...}} for a partition
// over Group nodes.
std::string communities_to_json(const Partition& partition,
                                const std::optional<double>& modularity_score);

}  // namespace eventnet
