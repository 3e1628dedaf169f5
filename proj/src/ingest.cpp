#include "eventnet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <unordered_map>
#include <unordered_set>

#include "eventnet/csv.hpp"
#include "eventnet/errors.hpp"

namespace eventnet {

namespace {

std::vector<std::string> split_csv_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(part);
      part.clear();
    } else {
      part.push_back(c);
    }
  }
  parts.push_back(part);
  for (std::string& p : parts) p = normalize_label(p);
  std::erase_if(parts, [](const std::string& p) { return p.empty(); });
  return parts;
}

void check_arity(const std::string& field, const std::vector<std::string>& cols,
                 std::size_t max_arity) {
  if (cols.empty()) throw ConfigError("mapping for '" + field + "' names no columns");
  if (cols.size() > max_arity) {
    throw ConfigError("mapping for '" + field + "' names " + std::to_string(cols.size()) +
                      " columns, at most " + std::to_string(max_arity) + " allowed");
  }
}

std::string single_column(const std::string& field, const std::string& value) {
  auto cols = split_csv_list(value);
  if (cols.size() != 1) {
    throw ConfigError("mapping for '" + field + "' must name exactly one column");
  }
  return cols[0];
}

}  // namespace

void apply_mapping_entry(ColumnMapping& mapping, const std::string& field,
                         const std::string& columns) {
  if (field == "event_id") {
    mapping.event_id = single_column(field, columns);
  } else if (field == "year") {
    mapping.year = single_column(field, columns);
  } else if (field == "month") {
    mapping.month = single_column(field, columns);
  } else if (field == "day") {
    mapping.day = single_column(field, columns);
  } else if (field == "country") {
    mapping.country = single_column(field, columns);
  } else if (field == "region") {
    mapping.region = single_column(field, columns);
  } else if (field == "groups") {
    mapping.groups = split_csv_list(columns);
    check_arity(field, mapping.groups, 3);
  } else if (field == "attack_types") {
    mapping.attack_types = split_csv_list(columns);
    check_arity(field, mapping.attack_types, 3);
  } else if (field == "target_types") {
    mapping.target_types = split_csv_list(columns);
    check_arity(field, mapping.target_types, 3);
  } else if (field == "weapon_types") {
    mapping.weapon_types = split_csv_list(columns);
    check_arity(field, mapping.weapon_types, 4);
  } else if (field == "killed") {
    mapping.killed = single_column(field, columns);
  } else if (field == "wounded") {
    mapping.wounded = single_column(field, columns);
  } else if (field == "related") {
    mapping.related = single_column(field, columns);
  } else if (field == "multi_incident") {
    mapping.multi_incident = single_column(field, columns);
  } else {
    throw ConfigError("unknown mapping field '" + field + "'");
  }
}

ColumnMapping load_mapping_file(std::istream& in) {
  ColumnMapping mapping;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = normalize_label(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("mapping line " + std::to_string(line_no) + " is not key=value");
    }
    apply_mapping_entry(mapping, normalize_label(trimmed.substr(0, eq)),
                        trimmed.substr(eq + 1));
  }
  return mapping;
}

namespace {

class RowView {
 public:
  RowView(const std::vector<std::string>& header, const std::vector<std::string>& fields)
      : fields_(fields) {
    for (std::size_t i = 0; i < header.size(); ++i) index_.emplace(header[i], i);
  }

  void rebind(const std::vector<std::string>& fields) { fields_ = fields; }

  std::size_t column_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw ConfigError("mapped column '" + name + "' not found in CSV header");
    }
    return it->second;
  }

  const std::string& cell(std::size_t idx) const { return fields_.get()[idx]; }

 private:
  std::unordered_map<std::string, std::size_t> index_;
  std::reference_wrapper<const std::vector<std::string>> fields_;
};

std::optional<long long> parse_int_cell(const std::string& raw) {
  std::string t = normalize_label(raw);
  if (t.empty()) return std::nullopt;
  try {
    std::size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

// GTD exports occasionally render counts as decimals ("2.0").
std::optional<std::int64_t> parse_count_cell(const std::string& raw) {
  std::string t = normalize_label(raw);
  if (t.empty()) return std::nullopt;
  try {
    std::size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size() || std::isnan(v) || v < 0) return std::nullopt;
    return static_cast<std::int64_t>(std::llround(v));
  } catch (...) {
    return std::nullopt;
  }
}

bool parse_bool_cell(const std::string& raw) {
  std::string t = normalize_label(raw);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return t == "1" || t == "true" || t == "yes";
}

std::vector<std::string> split_related_ids(const std::string& raw) {
  std::vector<std::string> ids;
  std::string part;
  for (char c : raw) {
    if (c == ',' || c == ';') {
      ids.push_back(part);
      part.clear();
    } else {
      part.push_back(c);
    }
  }
  ids.push_back(part);
  for (std::string& id : ids) id = normalize_label(id);
  std::erase_if(ids, [](const std::string& id) { return id.empty(); });
  return ids;
}

}  // namespace

std::vector<EventRecord> parse_csv(std::istream& in, const ColumnMapping& mapping,
                                   ParseStats* stats) {
  CsvReader reader(in);
  std::vector<std::string> header;
  if (!reader.next_row(header)) throw ParseError("input has no header row");

  std::vector<std::string> fields;
  RowView row(header, fields);

  const std::size_t idx_id = row.column_index(mapping.event_id);
  const std::size_t idx_year = row.column_index(mapping.year);
  const std::size_t idx_month = row.column_index(mapping.month);
  const std::size_t idx_day = row.column_index(mapping.day);
  const std::size_t idx_country = row.column_index(mapping.country);
  const std::size_t idx_region = row.column_index(mapping.region);
  const std::size_t idx_killed = row.column_index(mapping.killed);
  const std::size_t idx_wounded = row.column_index(mapping.wounded);
  const std::size_t idx_related = row.column_index(mapping.related);
  const std::size_t idx_multi = row.column_index(mapping.multi_incident);
  auto indices_of = [&row](const std::vector<std::string>& names) {
    std::vector<std::size_t> idx;
    idx.reserve(names.size());
    for (const std::string& n : names) idx.push_back(row.column_index(n));
    return idx;
  };
  const auto idx_groups = indices_of(mapping.groups);
  const auto idx_attack = indices_of(mapping.attack_types);
  const auto idx_target = indices_of(mapping.target_types);
  const auto idx_weapon = indices_of(mapping.weapon_types);

  ParseStats local;
  std::vector<EventRecord> events;
  std::unordered_set<std::string> seen_ids;

  while (reader.next_row(fields)) {
    if (fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(fields.size()),
                       reader.row_number());
    }
    row.rebind(fields);
    ++local.rows_total;

    EventRecord e;
    e.event_id = normalize_label(row.cell(idx_id));
    auto year = parse_int_cell(row.cell(idx_year));
    if (e.event_id.empty() || !year) {
      ++local.rows_skipped;
      continue;
    }
    e.year = static_cast<int>(*year);
    if (!seen_ids.insert(e.event_id).second) {
      throw DataError("duplicate event id '" + e.event_id + "'");
    }

    // GTD sentinel 0 means unknown month/day; out-of-range values are
    // treated the same way.
    auto month = parse_int_cell(row.cell(idx_month));
    if (month && *month >= 1 && *month <= 12) e.month = static_cast<int>(*month);
    auto day = parse_int_cell(row.cell(idx_day));
    if (day && *day >= 1 && *day <= 31) e.day = static_cast<int>(*day);

    e.country = normalize_label(row.cell(idx_country));
    e.region = normalize_label(row.cell(idx_region));

    for (std::size_t idx : idx_groups) {
      std::string name = normalize_group_name(row.cell(idx));
      if (name.empty() || is_unknown_group(name)) continue;
      if (std::find(e.groups.begin(), e.groups.end(), name) == e.groups.end()) {
        e.groups.push_back(name);
      }
    }
    for (std::size_t idx : idx_attack) {
      std::string label = normalize_label(row.cell(idx));
      if (!label.empty()) e.attack_types.push_back(label);
    }
    for (std::size_t idx : idx_target) {
      std::string label = normalize_label(row.cell(idx));
      if (!label.empty()) e.target_types.push_back(label);
    }
    for (std::size_t idx : idx_weapon) {
      std::string label = normalize_label(row.cell(idx));
      if (!label.empty()) e.weapon_types.push_back(label);
    }

    e.killed = parse_count_cell(row.cell(idx_killed));
    e.wounded = parse_count_cell(row.cell(idx_wounded));
    e.related_ids = split_related_ids(row.cell(idx_related));
    e.multi_incident = parse_bool_cell(row.cell(idx_multi));

    events.push_back(std::move(e));
    ++local.rows_kept;
  }

  if (stats) *stats = local;
  return events;
}

}  // namespace eventnet
