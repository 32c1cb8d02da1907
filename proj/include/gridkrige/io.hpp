#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridkrige/core.hpp"
#include "gridkrige/search.hpp"

namespace gridkrige {

/// Parses `east,north,thick` CSV. Accepts \n or \r\n line endings and a
/// trailing newline; surrounding spaces in a field are ignored. Line and
/// column numbers in errors are 1-based, counting the header as line 1.
SampleSet read_samples_csv(std::istream& in);
SampleSet read_samples_csv(const std::filesystem::path& path);

/// The 75 coal-seam thickness measurements, read row-major as
/// (east, north, thick) triples.
SampleSet builtin_table1();

/// Run context stored next to the estimate.
struct ReportMetadata {
  std::string command;
  CorrelogramModel model;
  std::optional<GridSpec> grid;
  std::size_t sample_count = 0;
  std::optional<double> wall_time_seconds;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct ReportDocument {
  EstimateReport report;
  ReportMetadata metadata;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// JSON document. Numbers are written at full round-trip precision; a
/// `display` object repeats the headline values rounded to one decimal.
/// Weights are written only when `include_weights` is set.
std::string write_report(const ReportDocument& doc, bool include_weights = false);
ReportDocument parse_report(std::string_view text);

/// One-decimal display string, e.g. 38.875... -> "38.9".
std::string format_display(double value);

void write_surface_csv(std::span<const SurfacePoint> surface, std::ostream& out);
std::vector<SurfacePoint> read_surface_csv(std::istream& in);

}  // namespace gridkrige
