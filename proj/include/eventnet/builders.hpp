#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eventnet/events.hpp"
#include "eventnet/graph.hpp"

namespace eventnet {

// Ordered, pairwise disjoint analysis windows.
struct EraSpec {
  std::vector<TimeWindow> windows;
};

// Throws ConfigError when windows are unsorted or overlap.
void validate_eras(const EraSpec& eras);

// One co-attributed group pair observed in a window.
struct DyadCount {
  std::string group_a;  // group_a < group_b
  std::string group_b;
  std::size_t count = 0;
  TimeWindow window;

  friend bool operator==(const DyadCount&, const DyadCount&) = default;
};

// Keeps events whose date key lies in the window, preserving order.
std::vector<EventRecord> events_in_window(std::span<const EventRecord> events,
                                          const TimeWindow& window);

// Full heterogeneous view: an Event node per event joined to its Group,
// WeaponType, AttackType and TargetType nodes, weight 1 per relation,
// timestamped with the event date key. Unattributed events still contribute
// their weapon/attack/target edges.
HeteroGraph build_event_graph(std::span<const EventRecord> events);

// Bipartite Group--WeaponType graph: edge weight counts the events in which
// the group used the weapon type. Unattributed events contribute nothing.
HeteroGraph build_group_weapon_graph(std::span<const EventRecord> events);

// Group--Group co-attribution graph over events inside the window: every
// unordered pair among an event's groups accumulates weight 1. Single-group
// events contribute nothing and isolated groups are not added. Weights are
// recomputed from scratch per window, so per-era graphs reflect only
// in-window co-attributions.
HeteroGraph build_association_graph(std::span<const EventRecord> events,
                                    const TimeWindow& window = TimeWindow::all());

// Zero-weight edges are floored here so random-walk transitions stay defined.
inline constexpr double kLethalityWeightFloor = 1e-6;

// Bipartite Event--Group graph weighted by casualty count (killed + wounded,
// unknown as 0). Each attributed group carries the full casualty weight;
// zero or unknown casualties get kLethalityWeightFloor.
HeteroGraph build_lethality_graph(std::span<const EventRecord> events);

// Consecutive step-month windows covering span (last one may be short), each
// holding the event graph of the group's events in that window. Throws
// ConfigError for step < 1 or the unknown-group marker.
std::vector<std::pair<TimeWindow, HeteroGraph>> build_group_ego_timeline(
    std::span<const EventRecord> events, const std::string& group, const TimeWindow& span,
    int step_months);

// Per-era unordered co-attribution pair counts; agrees exactly with
// build_association_graph edge weights on every window. Output sorted by
// (era index, pair).
std::vector<DyadCount> count_temporal_dyads(std::span<const EventRecord> events,
                                            const EraSpec& eras);

// Event count per year, attributed or not; missing years absent.
std::map<int, std::size_t> yearly_frequency(std::span<const EventRecord> events);

}  // namespace eventnet
