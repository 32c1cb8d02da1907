#include "gridkrige/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gridkrige/io.hpp"
#include "gridkrige/kriging.hpp"
#include "gridkrige/search.hpp"

namespace gridkrige::cli {

namespace {

struct RunConfig {
  std::string input;
  bool builtin_table1 = false;
  double range = 30.0;
  double sill = 1.0;
  double shape = 2.0;
  std::string grid_east = "-50:50:0.1";
  std::string grid_north = "-50:50:0.1";
  std::string target;
  unsigned workers = 0;
  std::string output;
  bool include_weights = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, char sep, std::size_t expected,
                               const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    const std::string field = text.substr(start, pos - start);
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
      throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
    out.push_back(v);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (out.size() != expected) throw UsageError(std::string("malformed ") + what + " '" + text + "'");
  return out;
}

AxisSpec parse_axis(const std::string& text) {
  const auto v = parse_list(text, ':', 3, "grid axis (expected min:max:step)");
  return {v[0], v[1], v[2]};
}

GridSpec parse_grid(const RunConfig& cfg) {
  return GridSpec(parse_axis(cfg.grid_east), parse_axis(cfg.grid_north));
}

Location parse_target(const std::string& text) {
  const auto v = parse_list(text, ',', 2, "target (expected east,north)");
  return {v[0], v[1]};
}

SampleSet load_samples(const RunConfig& cfg) {
  if (cfg.builtin_table1 == !cfg.input.empty()) {
    throw UsageError("give exactly one of --input or --builtin-table1");
  }
  return cfg.builtin_table1 ? builtin_table1() : read_samples_csv(std::filesystem::path(cfg.input));
}

/// Writes to --output when set, else to `out`.
template <typename Writer>
void emit(const RunConfig& cfg, std::ostream& out, Writer&& write) {
  if (cfg.output.empty()) {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.output);
  write(file);
  if (!file) throw UsageError("failed writing " + cfg.output);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  auto* input = cmd->add_option("-i,--input", cfg.input, "CSV with header east,north,thick");
  auto* builtin =
      cmd->add_flag("--builtin-table1", cfg.builtin_table1, "use the embedded coal-seam dataset");
  input->excludes(builtin);
  builtin->excludes(input);
  cmd->add_option("--range", cfg.range, "correlogram practical range")->capture_default_str();
  cmd->add_option("--sill", cfg.sill, "correlogram sill")->capture_default_str();
  cmd->add_option("--shape", cfg.shape, "correlogram shape exponent")->capture_default_str();
  cmd->add_option("-o,--output", cfg.output, "write the result here instead of stdout");
}

void add_grid_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--grid-east", cfg.grid_east, "east axis as min:max:step")
      ->capture_default_str();
  cmd->add_option("--grid-north", cfg.grid_north, "north axis as min:max:step")
      ->capture_default_str();
  cmd->add_option("-j,--workers", cfg.workers, "worker threads, 0 = all cores, 1 = sequential")
      ->capture_default_str();
}

void add_weights_flag(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--weights", cfg.include_weights, "include the weight vector in the report");
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SampleSet samples = load_samples(cfg);
  const CorrelogramModel model(cfg.sill, cfg.range, cfg.shape);
  const GridSpec grid = parse_grid(cfg);
  const SearchResult found = grid_search(samples, model, grid, {.workers = cfg.workers});

  ReportDocument doc{found.report, {"estimate", model, grid, samples.size(), seconds_since(start)}};
  emit(cfg, out, [&](std::ostream& os) { os << write_report(doc, cfg.include_weights); });
  return kOk;
}

int cmd_krige(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Location target = parse_target(cfg.target);
  const SampleSet samples = load_samples(cfg);
  const CorrelogramModel model(cfg.sill, cfg.range, cfg.shape);
  const EstimateReport report = estimate_at(samples, model, target);

  ReportDocument doc{report, {"krige", model, std::nullopt, samples.size(), seconds_since(start)}};
  emit(cfg, out, [&](std::ostream& os) { os << write_report(doc, cfg.include_weights); });
  return kOk;
}

int cmd_gls(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SampleSet samples = load_samples(cfg);
  const CorrelogramModel model(cfg.sill, cfg.range, cfg.shape);
  const EstimateReport report = estimate_gls(samples, model);

  ReportDocument doc{report, {"gls", model, std::nullopt, samples.size(), seconds_since(start)}};
  emit(cfg, out, [&](std::ostream& os) { os << write_report(doc, cfg.include_weights); });
  return kOk;
}

int cmd_surface(const RunConfig& cfg, std::ostream& out) {
  const SampleSet samples = load_samples(cfg);
  const CorrelogramModel model(cfg.sill, cfg.range, cfg.shape);
  const GridSpec grid = parse_grid(cfg);
  if (grid.east_count() > kMaxSurfaceNodes / std::max<std::size_t>(grid.north_count(), 1) ||
      grid.node_count() > kMaxSurfaceNodes) {
    throw UsageError("grid has more than " + std::to_string(kMaxSurfaceNodes) + " nodes");
  }
  const auto surface = objective_surface(samples, model, grid, {.workers = cfg.workers});
  emit(cfg, out, [&](std::ostream& os) { write_surface_csv(surface, os); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kriging estimation by minimizing |w'r + mu| over a grid"};
  app.name("gridkrige");
  app.require_subcommand(1);

  RunConfig cfg;
  auto* estimate = app.add_subcommand("estimate", "grid search for the node minimizing |w'r + mu|");
  auto* krige = app.add_subcommand("krige", "estimate at a single target");
  auto* gls = app.add_subcommand("gls", "estimate with generalized least-squares weights");
  auto* surface = app.add_subcommand("surface", "write the objective surface as CSV");

  for (auto* cmd : {estimate, krige, gls, surface}) add_common_options(cmd, cfg);
  for (auto* cmd : {estimate, surface}) add_grid_options(cmd, cfg);
  for (auto* cmd : {estimate, krige, gls}) add_weights_flag(cmd, cfg);
  krige->add_option("-t,--target", cfg.target, "target location as east,north")->required();

  try {
    // CLI11 consumes a reversed argument vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (estimate->parsed()) return cmd_estimate(cfg, out);
    if (krige->parsed()) return cmd_krige(cfg, out);
    if (gls->parsed()) return cmd_gls(cfg, out);
    return cmd_surface(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == ErrorCode::SingularMatrix ? kNumericalError : kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace gridkrige::cli
