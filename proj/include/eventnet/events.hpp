#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eventnet/dates.hpp"

namespace eventnet {

// Canonical marker for an unattributed perpetrator. Group lists never
// contain it; builders treat events without named groups as unattributed.
inline constexpr std::string_view kUnknownGroup = "Unknown";

// One normalized incident row. Unknown month/day/casualties are nullopt.
struct EventRecord {
  std::string event_id;
  int year = 0;
  std::optional<int> month;  // 1..12
  std::optional<int> day;    // 1..31
  std::string country;
  std::string region;
  std::vector<std::string> groups;        // up to 3, canonical, primary first
  std::vector<std::string> attack_types;  // up to 3
  std::vector<std::string> target_types;  // up to 3
  std::vector<std::string> weapon_types;  // up to 4
  std::optional<std::int64_t> killed;
  std::optional<std::int64_t> wounded;
  std::vector<std::string> related_ids;
  bool multi_incident = false;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

// Trim surrounding whitespace and collapse internal runs to single spaces.
std::string normalize_label(std::string_view raw);

// normalize_label plus mapping of the literal "unknown" (any case) to the
// canonical marker. Total and idempotent.
std::string normalize_group_name(std::string_view raw);

inline bool is_unknown_group(std::string_view name) { return name == kUnknownGroup; }

// (year, month-or-1, day-or-1): unknown parts sort as day 1 of the year.
DateKey event_date_key(const EventRecord& e);

// killed + wounded with unknown treated as 0.
std::int64_t casualty_count(const EventRecord& e);

// Conjunctive predicates; absent fields do not filter.
struct FilterSpec {
  std::optional<std::string> country;
  std::optional<std::string> region;
  std::optional<int> min_year;
  std::optional<int> max_year;
  std::optional<std::size_t> max_events;  // head-truncation after filtering
};

// Keeps events satisfying every present predicate, preserving order, then
// truncates to max_events survivors. Throws ConfigError on an invalid spec
// (min_year > max_year, max_events == 0).
std::vector<EventRecord> filter_events(const std::vector<EventRecord>& events,
                                       const FilterSpec& spec);

// Canonical event JSON: array of objects keyed by the EventRecord field
// names, unknown values as null, object keys sorted. This is the interchange
// format between ingest and everything downstream.
std::string events_to_json(const std::vector<EventRecord>& events);
std::vector<EventRecord> events_from_json(std::string_view json_text);

void write_events_json(std::ostream& out, const std::vector<EventRecord>& events);
std::vector<EventRecord> read_events_json(std::istream& in);

}  // namespace eventnet
