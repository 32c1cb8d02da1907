#include "gridkrige/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace gridkrige {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DuplicateLocation: return "DuplicateLocation";
    case ErrorCode::NonFiniteField: return "NonFiniteField";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::BadFieldCount: return "BadFieldCount";
    case ErrorCode::UnparsableNumber: return "UnparsableNumber";
  }
  return "Unknown";
}

std::vector<double> SampleSet::values() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.value);
  return out;
}

SampleSet validate_samples(std::vector<SamplePoint> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no sample points");

  // Exact coordinate equality; near-duplicates are left to the solver.
  std::map<std::pair<double, double>, std::size_t> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (!std::isfinite(p.east) || !std::isfinite(p.north) || !std::isfinite(p.value)) {
      throw Error(ErrorCode::NonFiniteField,
                  "non-finite field in sample row " + std::to_string(i), i);
    }
    // -0.0 and +0.0 are the same location
    const std::pair<double, double> key{p.east + 0.0, p.north + 0.0};
    auto [it, inserted] = seen.emplace(key, i);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateLocation,
                  "samples " + std::to_string(it->second) + " and " + std::to_string(i) +
                      " share the same location",
                  it->second, i);
    }
  }
  return SampleSet(std::move(points));
}

CorrelogramModel::CorrelogramModel(double sill, double practical_range, double shape_exponent)
    : sill_(sill), range_(practical_range), shape_(shape_exponent) {
  const bool ok = std::isfinite(sill) && std::isfinite(practical_range) &&
                  std::isfinite(shape_exponent) && sill > 0.0 && practical_range > 0.0 &&
                  shape_exponent > 0.0;
  if (!ok) {
    throw Error(ErrorCode::InvalidArgument,
                "correlogram sill, range and shape must be finite and positive");
  }
}

std::size_t AxisSpec::count() const noexcept {
  const double span = (max - min) / step;
  return static_cast<std::size_t>(std::floor(span + 1e-9 * std::max(1.0, span))) + 1;
}

GridSpec::GridSpec(AxisSpec east, AxisSpec north) : east_(east), north_(north) {
  for (const AxisSpec* axis : {&east_, &north_}) {
    if (!std::isfinite(axis->min) || !std::isfinite(axis->max) || !std::isfinite(axis->step)) {
      throw Error(ErrorCode::InvalidArgument, "grid bounds and step must be finite");
    }
    if (axis->step <= 0.0) throw Error(ErrorCode::InvalidArgument, "grid step must be positive");
    if (axis->min > axis->max) throw Error(ErrorCode::EmptyGrid, "grid min exceeds max");
  }
}

}  // namespace gridkrige
