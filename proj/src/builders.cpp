#include "eventnet/builders.hpp"

#include <algorithm>
#include <set>

#include "eventnet/errors.hpp"

namespace eventnet {

void validate_eras(const EraSpec& eras) {
  for (const TimeWindow& w : eras.windows) validate_window(w);
  for (std::size_t i = 1; i < eras.windows.size(); ++i) {
    if (!(eras.windows[i - 1].end < eras.windows[i].start)) {
      throw ConfigError("era windows must be sorted and disjoint: " +
                        format_window(eras.windows[i - 1]) + " overlaps " +
                        format_window(eras.windows[i]));
    }
  }
}

std::vector<EventRecord> events_in_window(std::span<const EventRecord> events,
                                          const TimeWindow& window) {
  validate_window(window);
  std::vector<EventRecord> kept;
  for (const EventRecord& e : events) {
    if (window.contains(event_date_key(e))) kept.push_back(e);
  }
  return kept;
}

namespace {

// De-duplicated labels in first-seen order; raw lists may repeat a label.
std::vector<std::string> unique_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const std::string& l : labels) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

}  // namespace

HeteroGraph build_event_graph(std::span<const EventRecord> events) {
  HeteroGraph g;
  for (const EventRecord& e : events) {
    NodeId ev = g.upsert_node(NodeKind::Event, e.event_id);
    DateKey ts = event_date_key(e);
    for (const std::string& name : unique_labels(e.groups)) {
      g.accumulate_edge(ev, g.upsert_node(NodeKind::Group, name), EdgeKind::PerpetratedBy,
                        1.0, ts);
    }
    for (const std::string& label : unique_labels(e.weapon_types)) {
      g.accumulate_edge(ev, g.upsert_node(NodeKind::WeaponType, label), EdgeKind::UsedWeapon,
                        1.0, ts);
    }
    for (const std::string& label : unique_labels(e.attack_types)) {
      g.accumulate_edge(ev, g.upsert_node(NodeKind::AttackType, label),
                        EdgeKind::OfAttackType, 1.0, ts);
    }
    for (const std::string& label : unique_labels(e.target_types)) {
      g.accumulate_edge(ev, g.upsert_node(NodeKind::TargetType, label), EdgeKind::Targeted,
                        1.0, ts);
    }
  }
  return g;
}

HeteroGraph build_group_weapon_graph(std::span<const EventRecord> events) {
  HeteroGraph g;
  for (const EventRecord& e : events) {
    DateKey ts = event_date_key(e);
    for (const std::string& name : unique_labels(e.groups)) {
      NodeId gn = g.upsert_node(NodeKind::Group, name);
      for (const std::string& label : unique_labels(e.weapon_types)) {
        g.accumulate_edge(gn, g.upsert_node(NodeKind::WeaponType, label),
                          EdgeKind::UsedWeapon, 1.0, ts);
      }
    }
  }
  return g;
}

HeteroGraph build_association_graph(std::span<const EventRecord> events,
                                    const TimeWindow& window) {
  validate_window(window);
  HeteroGraph g;
  for (const EventRecord& e : events) {
    DateKey ts = event_date_key(e);
    if (!window.contains(ts)) continue;
    std::vector<std::string> groups = unique_labels(e.groups);
    if (groups.size() < 2) continue;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        NodeId a = g.upsert_node(NodeKind::Group, groups[i]);
        NodeId b = g.upsert_node(NodeKind::Group, groups[j]);
        g.accumulate_edge(a, b, EdgeKind::AssociatedWith, 1.0, ts);
      }
    }
  }
  return g;
}

HeteroGraph build_lethality_graph(std::span<const EventRecord> events) {
  HeteroGraph g;
  for (const EventRecord& e : events) {
    std::vector<std::string> groups = unique_labels(e.groups);
    if (groups.empty()) continue;
    double casualties = static_cast<double>(casualty_count(e));
    double weight = casualties > 0.0 ? casualties : kLethalityWeightFloor;
    NodeId ev = g.upsert_node(NodeKind::Event, e.event_id);
    DateKey ts = event_date_key(e);
    for (const std::string& name : groups) {
      // Competing attributions are alternatives, not shares: each group
      // carries the full casualty weight.
      g.accumulate_edge(ev, g.upsert_node(NodeKind::Group, name), EdgeKind::Inflicted,
                        weight, ts);
    }
  }
  return g;
}

std::vector<std::pair<TimeWindow, HeteroGraph>> build_group_ego_timeline(
    std::span<const EventRecord> events, const std::string& group, const TimeWindow& span,
    int step_months) {
  validate_window(span);
  if (step_months < 1) throw ConfigError("ego timeline step must be at least 1 month");
  std::string canonical = normalize_group_name(group);
  if (canonical.empty() || is_unknown_group(canonical)) {
    throw ConfigError("ego timeline requires a named group");
  }

  std::vector<EventRecord> own;
  for (const EventRecord& e : events) {
    if (std::find(e.groups.begin(), e.groups.end(), canonical) != e.groups.end()) {
      own.push_back(e);
    }
  }

  auto year_of = [](int mi) { return mi >= 0 ? mi / 12 : (mi - 11) / 12; };
  auto month_of = [&](int mi) { return mi - 12 * year_of(mi) + 1; };

  std::vector<std::pair<TimeWindow, HeteroGraph>> timeline;
  int first = month_index(span.start);
  int last = month_index(span.end);
  for (int lo = first; lo <= last; lo += step_months) {
    int hi = std::min(lo + step_months - 1, last);
    TimeWindow w = TimeWindow::months(year_of(lo), month_of(lo), year_of(hi), month_of(hi));
    timeline.emplace_back(w, build_event_graph(events_in_window(own, w)));
  }
  return timeline;
}

std::vector<DyadCount> count_temporal_dyads(std::span<const EventRecord> events,
                                            const EraSpec& eras) {
  validate_eras(eras);
  std::vector<DyadCount> out;
  for (const TimeWindow& w : eras.windows) {
    std::map<std::pair<std::string, std::string>, std::size_t> counts;
    for (const EventRecord& e : events) {
      if (!w.contains(event_date_key(e))) continue;
      std::vector<std::string> groups = unique_labels(e.groups);
      if (groups.size() < 2) continue;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
          auto pair = std::minmax(groups[i], groups[j]);
          ++counts[{pair.first, pair.second}];
        }
      }
    }
    for (const auto& [pair, count] : counts) {
      out.push_back(DyadCount{pair.first, pair.second, count, w});
    }
  }
  return out;
}

std::map<int, std::size_t> yearly_frequency(std::span<const EventRecord> events) {
  std::map<int, std::size_t> counts;
  for (const EventRecord& e : events) ++counts[e.year];
  return counts;
}

}  // namespace eventnet
