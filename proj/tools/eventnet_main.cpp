// eventnet — command line front end: ingest -> build -> analyze pipelines
// over GTD-style event tables.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eventnet/algorithms.hpp"
#include "eventnet/builders.hpp"
#include "eventnet/errors.hpp"
#include "eventnet/graph_io.hpp"
#include "eventnet/ingest.hpp"
#include "eventnet/reports.hpp"

namespace {

namespace fs = std::filesystem;
using namespace eventnet;

// Relative output paths land under EVENTNET_OUTPUT_DIR when it is set.
fs::path resolve_out(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("EVENTNET_OUTPUT_DIR"); dir && *dir) {
      p = fs::path(dir) / p;
    }
  }
  return p;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << content;
}

// Empty path means standard output.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(resolve_out(out_path), content);
  }
}

std::vector<EventRecord> load_events(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open events file '" + path + "'");
  return read_events_json(in);
}

EraSpec parse_eras(const std::vector<std::string>& era_flags) {
  EraSpec eras;
  for (const std::string& text : era_flags) eras.windows.push_back(parse_window(text));
  validate_eras(eras);
  return eras;
}

struct IngestArgs {
  std::string input;
  std::string mapping_file;
  std::vector<std::string> map_entries;
  std::string out;
  FilterSpec filter;
  std::optional<int> min_year, max_year;
  std::optional<std::size_t> max_events;
  std::string country, region;
};

int run_ingest(const IngestArgs& args) {
  ColumnMapping mapping;
  if (!args.mapping_file.empty()) {
    std::ifstream in(args.mapping_file);
    if (!in) throw ConfigError("cannot open mapping file '" + args.mapping_file + "'");
    mapping = load_mapping_file(in);
  }
  for (const std::string& entry : args.map_entries) {
    auto eq = entry.find('=');
    if (eq == std::string::npos) throw ConfigError("--map expects field=column[,column...]");
    apply_mapping_entry(mapping, entry.substr(0, eq), entry.substr(eq + 1));
  }

  std::ifstream in(args.input, std::ios::binary);
  if (!in) throw ConfigError("cannot open input file '" + args.input + "'");
  ParseStats stats;
  std::vector<EventRecord> events = parse_csv(in, mapping, &stats);

  FilterSpec filter;
  if (!args.country.empty()) filter.country = args.country;
  if (!args.region.empty()) filter.region = args.region;
  filter.min_year = args.min_year;
  filter.max_year = args.max_year;
  filter.max_events = args.max_events;
  std::vector<EventRecord> kept = filter_events(events, filter);

  emit(args.out, events_to_json(kept));
  std::cerr << "parsed " << stats.rows_total << " rows, " << stats.rows_kept << " records ("
            << stats.rows_skipped << " skipped), " << kept.size() << " after filters\n";
  return 0;
}

struct BuildArgs {
  std::string view;
  std::string events_path;
  std::string window;
  std::string group;
  int step = 0;
  std::vector<std::string> formats;
  std::string out;
};

int run_build(const BuildArgs& args) {
  std::vector<GraphFormat> formats;
  if (args.formats.empty()) {
    formats.push_back(GraphFormat::Json);
  } else {
    for (const std::string& f : args.formats) formats.push_back(graph_format_from_string(f));
  }

  std::vector<EventRecord> events = load_events(args.events_path);
  std::optional<TimeWindow> window;
  if (!args.window.empty()) window = parse_window(args.window);

  auto write_formats = [&](const std::string& base, const HeteroGraph& g) {
    for (GraphFormat f : formats) {
      fs::path path = resolve_out(base + "." + std::string(file_extension(f)));
      std::ostringstream buf;
      write_graph(buf, g, f);
      write_file(path, buf.str());
      std::cerr << "wrote " << path.string() << " (" << g.node_count() << " nodes, "
                << g.edge_count() << " edges)\n";
    }
  };

  if (args.view == "ego") {
    if (args.group.empty()) throw ConfigError("build ego requires --group");
    if (args.step < 1) throw ConfigError("build ego requires --step >= 1 (months)");
    if (!window) throw ConfigError("build ego requires --window as the timeline span");
    auto timeline = build_group_ego_timeline(events, args.group, *window, args.step);
    for (std::size_t i = 0; i < timeline.size(); ++i) {
      char suffix[16];
      std::snprintf(suffix, sizeof(suffix), "_w%02zu", i);
      std::cerr << "window " << format_window(timeline[i].first) << ":\n";
      write_formats(args.out + suffix, timeline[i].second);
    }
    return 0;
  }

  std::vector<EventRecord> scoped =
      window ? events_in_window(events, *window) : std::move(events);
  HeteroGraph g;
  if (args.view == "event") {
    g = build_event_graph(scoped);
  } else if (args.view == "weapon-bipartite") {
    g = build_group_weapon_graph(scoped);
  } else if (args.view == "weapon-projection") {
    g = bipartite_projection(build_group_weapon_graph(scoped), NodeKind::Group,
                             NodeKind::WeaponType);
  } else if (args.view == "association") {
    g = build_association_graph(scoped);
  } else if (args.view == "lethality") {
    g = build_lethality_graph(scoped);
  } else {
    throw ConfigError("unknown view '" + args.view + "'");
  }
  write_formats(args.out, g);
  return 0;
}

struct AnalyzeArgs {
  std::string analysis;
  std::string events_path;
  std::string window;
  std::vector<std::string> eras;
  std::string out;
  std::size_t k = 10;
  PageRankOptions pr;
};

int run_analyze(const AnalyzeArgs& args) {
  std::vector<EventRecord> events = load_events(args.events_path);

  if (args.analysis == "pagerank") {
    emit(args.out, ranking_to_json(top_k_lethal(events, args.k, args.pr)));
  } else if (args.analysis == "communities") {
    TimeWindow w = args.window.empty() ? TimeWindow::all() : parse_window(args.window);
    HeteroGraph g = build_association_graph(events, w);
    if (g.empty()) {
      emit(args.out, communities_to_json({}, std::nullopt));
    } else {
      Partition p = detect_communities(g);
      emit(args.out, communities_to_json(p, modularity(g, p)));
    }
  } else if (args.analysis == "metrics") {
    if (args.eras.empty()) throw ConfigError("analyze metrics requires at least one --era");
    emit(args.out, metrics_to_csv(era_metrics(events, parse_eras(args.eras))));
  } else if (args.analysis == "dyads") {
    if (args.eras.empty()) throw ConfigError("analyze dyads requires at least one --era");
    emit(args.out, dyads_to_csv(count_temporal_dyads(events, parse_eras(args.eras))));
  } else if (args.analysis == "yearly") {
    emit(args.out, yearly_to_csv(yearly_frequency(events)));
  } else {
    throw ConfigError("unknown analysis '" + args.analysis + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eventnet: temporal graph analytics over GTD-style event tables"};
  app.require_subcommand(1);
  app.set_config("--config");

  IngestArgs ingest_args;
  CLI::App* ingest = app.add_subcommand("ingest", "parse event CSV into canonical event JSON");
  ingest->add_option("--input", ingest_args.input, "input CSV file")->required();
  ingest->add_option("--mapping", ingest_args.mapping_file,
                     "column mapping file (field=column[,column...] lines)");
  ingest->add_option("--map", ingest_args.map_entries,
                     "inline mapping override, field=column[,column...]");
  ingest->add_option("--country", ingest_args.country, "keep only this country");
  ingest->add_option("--region", ingest_args.region, "keep only this region");
  ingest->add_option("--min-year", ingest_args.min_year, "keep events from this year on");
  ingest->add_option("--max-year", ingest_args.max_year, "keep events up to this year");
  ingest->add_option("--max-events", ingest_args.max_events,
                     "truncate to the first N events after filtering");
  ingest->add_option("--out", ingest_args.out, "output events JSON file (default: stdout)");

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "build a graph view from an events file");
  build->add_option("view", build_args.view,
                    "event | weapon-bipartite | weapon-projection | association | "
                    "lethality | ego")
      ->required();
  build->add_option("--events", build_args.events_path, "canonical events JSON")->required();
  build->add_option("--window", build_args.window,
                    "time window YYYY:YYYY or YYYY-MM:YYYY-MM (ego: the timeline span)");
  build->add_option("--group", build_args.group, "ego view: the group to follow");
  build->add_option("--step", build_args.step, "ego view: window length in months");
  build->add_option("--format", build_args.formats, "json | dot | graphml (repeatable)");
  build->add_option("--out", build_args.out, "output base path (extension appended)")
      ->required();

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "run an analysis over an events file");
  analyze->add_option("analysis", analyze_args.analysis,
                      "pagerank | communities | metrics | dyads | yearly")
      ->required();
  analyze->add_option("--events", analyze_args.events_path, "canonical events JSON")
      ->required();
  analyze->add_option("--window", analyze_args.window, "communities: association window");
  analyze->add_option("--era", analyze_args.eras,
                      "metrics/dyads: era window (repeatable, sorted, disjoint)");
  analyze->add_option("--k", analyze_args.k, "pagerank: ranking length")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--damping", analyze_args.pr.damping, "pagerank damping factor");
  analyze->add_option("--tol", analyze_args.pr.tol, "pagerank L1 convergence tolerance");
  analyze->add_option("--max-iter", analyze_args.pr.max_iter, "pagerank iteration cap");
  analyze->add_option("--out", analyze_args.out, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) return run_ingest(ingest_args);
    if (build->parsed()) return run_build(build_args);
    if (analyze->parsed()) return run_analyze(analyze_args);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
