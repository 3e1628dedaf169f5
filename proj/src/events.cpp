#include "eventnet/events.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "eventnet/errors.hpp"

namespace eventnet {

std::string normalize_label(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool in_space = false;
  for (char ch : raw) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(ch);
  }
  return out;
}

std::string normalize_group_name(std::string_view raw) {
  std::string name = normalize_label(raw);
  if (name.size() == kUnknownGroup.size()) {
    bool same = std::equal(name.begin(), name.end(), kUnknownGroup.begin(),
                           [](char a, char b) {
                             return std::tolower(static_cast<unsigned char>(a)) ==
                                    std::tolower(static_cast<unsigned char>(b));
                           });
    if (same) return std::string(kUnknownGroup);
  }
  return name;
}

DateKey event_date_key(const EventRecord& e) {
  return {e.year, e.month.value_or(1), e.day.value_or(1)};
}

std::int64_t casualty_count(const EventRecord& e) {
  return e.killed.value_or(0) + e.wounded.value_or(0);
}

std::vector<EventRecord> filter_events(const std::vector<EventRecord>& events,
                                       const FilterSpec& spec) {
  if (spec.min_year && spec.max_year && *spec.min_year > *spec.max_year) {
    throw ConfigError("filter min_year " + std::to_string(*spec.min_year) +
                      " exceeds max_year " + std::to_string(*spec.max_year));
  }
  if (spec.max_events && *spec.max_events == 0) {
    throw ConfigError("filter max_events must be at least 1");
  }
  std::vector<EventRecord> kept;
  for (const EventRecord& e : events) {
    if (spec.country && e.country != *spec.country) continue;
    if (spec.region && e.region != *spec.region) continue;
    if (spec.min_year && e.year < *spec.min_year) continue;
    if (spec.max_year && e.year > *spec.max_year) continue;
    kept.push_back(e);
    if (spec.max_events && kept.size() == *spec.max_events) break;
  }
  return kept;
}

namespace {

using nlohmann::json;

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json opt_i64(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

json record_to_json(const EventRecord& e) {
  return json{{"event_id", e.event_id},
              {"year", e.year},
              {"month", opt_int(e.month)},
              {"day", opt_int(e.day)},
              {"country", e.country},
              {"region", e.region},
              {"groups", e.groups},
              {"attack_types", e.attack_types},
              {"target_types", e.target_types},
              {"weapon_types", e.weapon_types},
              {"killed", opt_i64(e.killed)},
              {"wounded", opt_i64(e.wounded)},
              {"related_ids", e.related_ids},
              {"multi_incident", e.multi_incident}};
}

std::optional<int> json_opt_int(const json& v, const char* field) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_number_integer()) throw DataError(std::string("event field '") + field +
                                              "' must be an integer or null");
  return v.get<int>();
}

std::optional<std::int64_t> json_opt_i64(const json& v, const char* field) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_number_integer()) throw DataError(std::string("event field '") + field +
                                              "' must be an integer or null");
  return v.get<std::int64_t>();
}

const json& require(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) throw DataError(std::string("event object missing field '") + field + "'");
  return *it;
}

EventRecord record_from_json(const json& obj) {
  if (!obj.is_object()) throw DataError("event entry is not a JSON object");
  EventRecord e;
  e.event_id = require(obj, "event_id").get<std::string>();
  e.year = require(obj, "year").get<int>();
  e.month = json_opt_int(require(obj, "month"), "month");
  e.day = json_opt_int(require(obj, "day"), "day");
  e.country = require(obj, "country").get<std::string>();
  e.region = require(obj, "region").get<std::string>();
  e.groups = require(obj, "groups").get<std::vector<std::string>>();
  e.attack_types = require(obj, "attack_types").get<std::vector<std::string>>();
  e.target_types = require(obj, "target_types").get<std::vector<std::string>>();
  e.weapon_types = require(obj, "weapon_types").get<std::vector<std::string>>();
  e.killed = json_opt_i64(require(obj, "killed"), "killed");
  e.wounded = json_opt_i64(require(obj, "wounded"), "wounded");
  e.related_ids = require(obj, "related_ids").get<std::vector<std::string>>();
  e.multi_incident = require(obj, "multi_incident").get<bool>();
  return e;
}

}  // namespace

std::string events_to_json(const std::vector<EventRecord>& events) {
  json arr = json::array();
  for (const EventRecord& e : events) arr.push_back(record_to_json(e));
  return arr.dump(2) + "\n";
}

std::vector<EventRecord> events_from_json(std::string_view json_text) {
  json arr;
  try {
    arr = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid event JSON: ") + ex.what());
  }
  if (!arr.is_array()) throw DataError("event JSON root must be an array");
  std::vector<EventRecord> events;
  events.reserve(arr.size());
  for (const json& obj : arr) events.push_back(record_from_json(obj));
  return events;
}

void write_events_json(std::ostream& out, const std::vector<EventRecord>& events) {
  out << events_to_json(events);
}

std::vector<EventRecord> read_events_json(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  return events_from_json(text);
}

}  // namespace eventnet
