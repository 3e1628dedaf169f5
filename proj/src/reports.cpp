#include "eventnet/reports.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace eventnet {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

}  // namespace

std::string metrics_to_csv(const std::vector<MetricRow>& rows) {
  std::ostringstream out;
  out << "window,nodes,edges,avg_degree,modularity,avg_path_length_reachable\n";
  for (const MetricRow& r : rows) {
    out << format_window(r.window) << ',' << r.nodes << ',' << r.edges << ','
        << cell(r.average_degree) << ',' << cell(r.modularity_score) << ','
        << cell(r.average_path_length) << '\n';
  }
  return out.str();
}

std::string dyads_to_csv(const std::vector<DyadCount>& dyads) {
  std::ostringstream out;
  out << "window,group_a,group_b,count\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += "\"\"";
      else q.push_back(c);
    }
    return q + "\"";
  };
  for (const DyadCount& d : dyads) {
    out << format_window(d.window) << ',' << quote(d.group_a) << ',' << quote(d.group_b)
        << ',' << d.count << '\n';
  }
  return out.str();
}

std::string yearly_to_csv(const std::map<int, std::size_t>& counts) {
  std::ostringstream out;
  out << "year,count\n";
  for (const auto& [year, count] : counts) out << year << ',' << count << '\n';
  return out.str();
}

std::string ranking_to_json(const std::vector<RankedEntry>& ranking) {
  nlohmann::json arr = nlohmann::json::array();
  for (const RankedEntry& r : ranking) {
    arr.push_back({{"group", r.group}, {"score", r.score}});
  }
  return arr.dump(2) + "\n";
}

std::string communities_to_json(const Partition& partition,
                                const std::optional<double>& modularity_score) {
  nlohmann::json communities = nlohmann::json::object();
  for (const auto& [key, comm] : partition) communities[key.label] = comm;
  nlohmann::json root{{"modularity",
                       modularity_score ? nlohmann::json(*modularity_score)
                                        : nlohmann::json(nullptr)},
                      {"communities", std::move(communities)}};
  return root.dump(2) + "\n";
}

}  // namespace eventnet
