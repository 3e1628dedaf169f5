#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "eventnet/events.hpp"

namespace eventnet {

// Source-column names for each EventRecord field. Defaults follow the GTD
// codebook; every name is configuration, overridable per field.
struct ColumnMapping {
  std::string event_id = "eventid";
  std::string year = "iyear";
  std::string month = "imonth";
  std::string day = "iday";
  std::string country = "country_txt";
  std::string region = "region_txt";
  std::vector<std::string> groups = {"gname", "gname2", "gname3"};
  std::vector<std::string> attack_types = {"attacktype1_txt", "attacktype2_txt",
                                           "attacktype3_txt"};
  std::vector<std::string> target_types = {"targtype1_txt", "targtype2_txt", "targtype3_txt"};
  std::vector<std::string> weapon_types = {"weaptype1_txt", "weaptype2_txt", "weaptype3_txt",
                                           "weaptype4_txt"};
  std::string killed = "nkill";
  std::string wounded = "nwound";
  std::string related = "related";
  std::string multi_incident = "multiple";
};

// Applies one "field=column[,column...]" override. Throws ConfigError on an
// unknown field name or an arity violation (3 group/attack/target columns,
// 4 weapon columns at most).
void apply_mapping_entry(ColumnMapping& mapping, const std::string& field,
                         const std::string& columns);

// key=value file, one entry per line, '#' comments and blank lines ignored.
ColumnMapping load_mapping_file(std::istream& in);

struct ParseStats {
  std::size_t rows_total = 0;    // data rows seen (header excluded)
  std::size_t rows_kept = 0;     // records produced
  std::size_t rows_skipped = 0;  // rows without a usable event id or year
};

// Parses UTF-8 CSV with a header row into normalized event records, one per
// data row. Rows with no event id or no parsable year are skipped (counted
// in stats). Sentinels: month/day 0 or blank -> unknown; blank or negative
// casualties -> unknown. Throws ParseError (malformed CSV, with row number),
// ConfigError (mapped column absent from the header) and DataError
// (duplicate event id).
std::vector<EventRecord> parse_csv(std::istream& in, const ColumnMapping& mapping,
                                   ParseStats* stats = nullptr);

}  // namespace eventnet
