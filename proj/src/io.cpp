#include "gridkrige/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include <json.hpp>

namespace gridkrige {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view field, std::size_t line, std::size_t column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last) {
    throw Error(ErrorCode::UnparsableNumber,
                "line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": cannot parse '" + std::string(field) + "' as a number",
                line, column);
  }
  return value;
}

/// Reads a header line plus numeric records with one field per header name.
std::vector<std::vector<double>> read_numeric_csv(std::istream& in,
                                                  std::span<const std::string_view> header) {
  std::string line;
  if (!std::getline(in, line) || trim(line).empty()) {
    throw Error(ErrorCode::MissingHeader, "missing CSV header line");
  }
  const auto names = split_fields(line);
  // Tolerate a UTF-8 byte order mark before the first name.
  auto first = names.empty() ? std::string_view{} : names.front();
  if (first.starts_with("\xEF\xBB\xBF")) first.remove_prefix(3);
  bool header_ok = names.size() == header.size() && first == header.front();
  for (std::size_t i = 1; header_ok && i < header.size(); ++i) header_ok = names[i] == header[i];
  if (!header_ok) {
    std::string expected;
    for (auto h : header) expected += (expected.empty() ? "" : ",") + std::string(h);
    throw Error(ErrorCode::MissingHeader, "expected CSV header '" + expected + "'");
  }

  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::BadFieldCount,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields.size()),
                  line_no);
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      row.push_back(parse_number(fields[c], line_no, c + 1));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

constexpr std::array<std::string_view, 3> kSampleHeader{"east", "north", "thick"};
constexpr std::array<std::string_view, 4> kSurfaceHeader{"east", "north", "objective", "mean"};

void append_shortest(std::string& out, double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), ptr);
}

}  // namespace

SampleSet read_samples_csv(std::istream& in) {
  const auto rows = read_numeric_csv(in, kSampleHeader);
  std::vector<SamplePoint> points;
  points.reserve(rows.size());
  for (const auto& r : rows) points.push_back({r[0], r[1], r[2]});
  return validate_samples(std::move(points));
}

SampleSet read_samples_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
  return read_samples_csv(in);
}

SampleSet builtin_table1() {
  return validate_samples({
    {0.7, 59.6, 34.1},
    {2.1, 82.7, 42.2},
    {4.7, 75.1, 39.5},
    {4.8, 52.8, 34.3},
    {5.9, 67.1, 37.0},
    {6.0, 35.7, 35.9},
    {6.4, 33.7, 36.4},
    {7.0, 46.7, 34.6},
    {8.2, 40.1, 35.4},
    {13.3, 0.6, 44.7},
    {13.3, 68.2, 37.8},
    {13.4, 31.3, 37.8},
    {17.8, 6.9, 43.9},
    {20.1, 66.3, 37.7},
    {22.7, 87.6, 42.8},
    {23.0, 93.9, 43.6},
    {24.3, 73.0, 39.3},
    {24.8, 15.1, 42.3},
    {24.8, 26.3, 39.7},
    {26.4, 58.0, 36.9},
    {26.9, 65.0, 37.8},
    {27.7, 83.3, 41.8},
    {27.9, 90.8, 43.3},
    {29.1, 47.9, 36.7},
    {29.5, 89.4, 43.0},
    {30.1, 6.1, 43.6},
    {30.8, 12.1, 42.8},
    {32.7, 40.2, 37.5},
    {34.8, 8.1, 43.3},
    {35.3, 32.0, 38.8},
    {37.0, 70.3, 39.2},
    {38.2, 77.9, 40.7},
    {38.9, 23.3, 40.5},
    {39.4, 82.5, 41.4},
    {43.0, 4.7, 43.3},
    {43.7, 7.6, 43.1},
    {46.4, 84.1, 41.5},
    {46.7, 10.6, 42.6},
    {49.9, 22.1, 40.7},
    {51.0, 88.8, 42.0},
    {52.8, 68.9, 39.3},
    {52.9, 32.7, 39.2},
    {55.5, 92.9, 42.2},
    {56.0, 1.6, 42.7},
    {60.6, 75.2, 40.1},
    {62.1, 26.6, 40.1},
    {63.0, 12.7, 41.8},
    {69.0, 75.6, 40.1},
    {70.5, 83.7, 40.9},
    {70.9, 11.0, 41.7},
    {71.5, 29.5, 39.8},
    {78.1, 45.5, 38.7},
    {78.2, 9.1, 41.7},
    {78.4, 20.0, 40.8},
    {80.5, 55.9, 38.7},
    {81.1, 51.0, 38.6},
    {83.8, 7.9, 41.6},
    {84.5, 11.0, 41.5},
    {85.2, 67.3, 39.4},
    {85.5, 73.0, 39.8},
    {86.7, 70.4, 39.6},
    {87.2, 55.7, 38.8},
    {88.1, 0.0, 41.6},
    {88.4, 12.1, 41.3},
    {88.4, 99.6, 41.2},
    {88.8, 82.9, 40.5},
    {88.9, 6.2, 41.5},
    {90.6, 7.0, 41.5},
    {90.7, 49.6, 38.9},
    {91.5, 55.4, 39.0},
    {92.9, 46.8, 39.1},
    {93.4, 70.9, 39.7},
    {94.8, 71.5, 39.7},
    {96.2, 84.3, 40.3},
    {98.2, 58.2, 39.5},
  });
}

std::string format_display(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.1f", value);
  return buf.data();
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json axis_to_json(const AxisSpec& a) {
  return {{"min", a.min}, {"max", a.max}, {"step", a.step}};
}

AxisSpec axis_from_json(const ordered_json& j) {
  return {j.at("min").get<double>(), j.at("max").get<double>(), j.at("step").get<double>()};
}

template <typename T>
ordered_json optional_to_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<double> optional_double(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

std::string write_report(const ReportDocument& doc, bool include_weights) {
  const auto& r = doc.report;
  const auto& m = doc.metadata;

  ordered_json out;
  if (r.node) {
    out["node"] = {{"east", r.node->east}, {"north", r.node->north}};
  } else {
    out["node"] = nullptr;
  }
  out["mean"] = r.mean;
  out["variance"] = r.variance;
  out["mse"] = optional_to_json(r.mse);
  out["mu"] = r.mu;
  out["objective"] = optional_to_json(r.objective);
  out["negative_variance"] = r.negative_variance;
  if (include_weights) out["weights"] = r.weights;

  ordered_json display;
  if (r.node) {
    display["node"] = {{"east", format_display(r.node->east)},
                       {"north", format_display(r.node->north)}};
  }
  display["mean"] = format_display(r.mean);
  display["variance"] = format_display(r.variance);
  if (r.mse) display["mse"] = format_display(*r.mse);
  out["display"] = display;

  ordered_json meta;
  meta["command"] = m.command;
  meta["correlogram"] = {{"family", "gaussian"},
                         {"sill", m.model.sill()},
                         {"range", m.model.practical_range()},
                         {"shape", m.model.shape_exponent()}};
  if (m.grid) {
    meta["grid"] = {{"east", axis_to_json(m.grid->east())},
                    {"north", axis_to_json(m.grid->north())}};
  } else {
    meta["grid"] = nullptr;
  }
  meta["sample_count"] = m.sample_count;
  meta["wall_time_seconds"] = optional_to_json(m.wall_time_seconds);
  out["metadata"] = meta;

  return out.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view text) {
  ordered_json in;
  try {
    in = ordered_json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed report: ") + e.what());
  }

  ReportDocument doc;
  try {
    auto& r = doc.report;
    if (!in.at("node").is_null()) {
      r.node = Location{in["node"].at("east").get<double>(), in["node"].at("north").get<double>()};
    }
    r.mean = in.at("mean").get<double>();
    r.variance = in.at("variance").get<double>();
    r.mse = optional_double(in, "mse");
    r.mu = in.at("mu").get<double>();
    r.objective = optional_double(in, "objective");
    r.negative_variance = in.at("negative_variance").get<bool>();
    if (in.contains("weights")) r.weights = in["weights"].get<std::vector<double>>();

    const auto& meta = in.at("metadata");
    auto& m = doc.metadata;
    m.command = meta.at("command").get<std::string>();
    const auto& c = meta.at("correlogram");
    m.model = CorrelogramModel(c.at("sill").get<double>(), c.at("range").get<double>(),
                               c.at("shape").get<double>());
    if (!meta.at("grid").is_null()) {
      m.grid = GridSpec(axis_from_json(meta["grid"].at("east")),
                        axis_from_json(meta["grid"].at("north")));
    }
    m.sample_count = meta.at("sample_count").get<std::size_t>();
    m.wall_time_seconds = optional_double(meta, "wall_time_seconds");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed report: ") + e.what());
  }
  return doc;
}

void write_surface_csv(std::span<const SurfacePoint> surface, std::ostream& out) {
  std::string buf = "east,north,objective,mean\n";
  buf.reserve(1 << 16);
  for (const auto& p : surface) {
    append_shortest(buf, p.east);
    buf += ',';
    append_shortest(buf, p.north);
    buf += ',';
    append_shortest(buf, p.objective);
    buf += ',';
    append_shortest(buf, p.mean);
    buf += '\n';
    if (buf.size() > (1 << 16) - 128) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

std::vector<SurfacePoint> read_surface_csv(std::istream& in) {
  const auto rows = read_numeric_csv(in, kSurfaceHeader);
  std::vector<SurfacePoint> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back({r[0], r[1], r[2], r[3]});
  return out;
}

}  // namespace gridkrige
