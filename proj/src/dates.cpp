#include "eventnet/dates.hpp"

#include <cstdio>
#include <regex>

#include "eventnet/errors.hpp"

namespace eventnet {

std::string format_date(const DateKey& k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", k.year, k.month, k.day);
  return buf;
}

DateKey parse_date(std::string_view text) {
  static const std::regex re(R"((\d{1,4})-(\d{1,2})-(\d{1,2}))");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, re)) {
    throw ParseError("malformed date '" + std::string(text) + "'");
  }
  DateKey k{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
  if (k.month < 1 || k.month > 12 || k.day < 1 || k.day > 31) {
    throw ParseError("date out of range '" + std::string(text) + "'");
  }
  return k;
}

TimeWindow TimeWindow::years(int y0, int y1) {
  TimeWindow w{{y0, 1, 1}, {y1, 12, 31}};
  validate_window(w);
  return w;
}

TimeWindow TimeWindow::months(int y0, int m0, int y1, int m1) {
  // Day 31 as the inclusive upper bound is safe: keys never exceed day 31.
  TimeWindow w{{y0, m0, 1}, {y1, m1, 31}};
  validate_window(w);
  return w;
}

TimeWindow TimeWindow::all() { return {{-9999, 1, 1}, {9999, 12, 31}}; }

void validate_window(const TimeWindow& w) {
  if (w.end < w.start) {
    throw ConfigError("window start " + format_date(w.start) + " is after end " +
                      format_date(w.end));
  }
}

TimeWindow parse_window(std::string_view text) {
  static const std::regex year_re(R"((\d{1,4}):(\d{1,4}))");
  static const std::regex month_re(R"((\d{1,4})-(\d{1,2}):(\d{1,4})-(\d{1,2}))");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_match(text.begin(), text.end(), m, year_re)) {
    int y0 = std::stoi(m[1]);
    int y1 = std::stoi(m[2]);
    if (y1 < y0) throw ConfigError("window '" + std::string(text) + "' ends before it starts");
    return TimeWindow::years(y0, y1);
  }
  if (std::regex_match(text.begin(), text.end(), m, month_re)) {
    int y0 = std::stoi(m[1]);
    int mo0 = std::stoi(m[2]);
    int y1 = std::stoi(m[3]);
    int mo1 = std::stoi(m[4]);
    if (mo0 < 1 || mo0 > 12 || mo1 < 1 || mo1 > 12) {
      throw ConfigError("window '" + std::string(text) + "' has a month outside 1..12");
    }
    if (y1 * 12 + mo1 < y0 * 12 + mo0) {
      throw ConfigError("window '" + std::string(text) + "' ends before it starts");
    }
    return TimeWindow::months(y0, mo0, y1, mo1);
  }
  throw ConfigError("window '" + std::string(text) +
                    "' does not match YYYY:YYYY or YYYY-MM:YYYY-MM");
}

std::string format_window(const TimeWindow& w) {
  char buf[64];
  if (w.start.month == 1 && w.start.day == 1 && w.end.month == 12 && w.end.day == 31) {
    std::snprintf(buf, sizeof(buf), "%04d:%04d", w.start.year, w.end.year);
  } else if (w.start.day == 1 && w.end.day == 31) {
    std::snprintf(buf, sizeof(buf), "%04d-%02d:%04d-%02d", w.start.year, w.start.month,
                  w.end.year, w.end.month);
  } else {
    return format_date(w.start) + ":" + format_date(w.end);
  }
  return buf;
}

}  // namespace eventnet
