#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace eventnet {

// Sortable (year, month, day) key. Records with unknown month/day are keyed
// with the missing part substituted by 1, so keys always hold concrete values.
struct DateKey {
  int year = 0;
  int month = 1;  // 1..12
  int day = 1;    // 1..31

  friend auto operator<=>(const DateKey&, const DateKey&) = default;
};

// "1995-07-03" (zero padded, always 10 chars for 4-digit years)
std::string format_date(const DateKey& k);

// Inverse of format_date. Throws ParseError on malformed input.
DateKey parse_date(std::string_view text);

// Months since year 0, used for stepping month-granular windows.
inline int month_index(const DateKey& k) { return k.year * 12 + (k.month - 1); }

// Inclusive interval of date keys.
struct TimeWindow {
  DateKey start;
  DateKey end;

  bool contains(const DateKey& k) const { return start <= k && k <= end; }

  friend auto operator<=>(const TimeWindow&, const TimeWindow&) = default;

  // [Jan 1 y0, Dec 31 y1]
  static TimeWindow years(int y0, int y1);
  // [first day of (y0,m0), last day of (y1,m1)]
  static TimeWindow months(int y0, int m0, int y1, int m1);
  // Covers every representable date key.
  static TimeWindow all();
};

// Throws ConfigError when start > end.
void validate_window(const TimeWindow& w);

// Grammar: "YYYY:YYYY" (year-inclusive) or "YYYY-MM:YYYY-MM" (month-inclusive).
// Mixing the two forms in one value is rejected. Throws ConfigError.
TimeWindow parse_window(std::string_view text);

// Emits the year form when the window is year-aligned, the month form when it
// is month-aligned, otherwise full dates "YYYY-MM-DD:YYYY-MM-DD".
std::string format_window(const TimeWindow& w);

}  // namespace eventnet
