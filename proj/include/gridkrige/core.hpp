#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridkrige {

enum class ErrorCode {
  EmptyInput,
  DuplicateLocation,
  NonFiniteField,
  NegativeDistance,
  SingularMatrix,
  LengthMismatch,
  EmptyGrid,
  InvalidArgument,
  MissingHeader,
  BadFieldCount,
  UnparsableNumber,
};

const char* to_string(ErrorCode code) noexcept;

/// Base for every error raised by the library. Carries a machine-readable
/// code plus up to two integer details whose meaning depends on the code:
///
///   DuplicateLocation  first, second colliding sample indices
///   NonFiniteField     row index
///   SingularMatrix     offending pivot index
///   BadFieldCount      line number (1-based)
///   UnparsableNumber   line number, column number (both 1-based)
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t first = 0,
        std::size_t second = 0)
      : std::runtime_error(what), code_(code), first_(first), second_(second) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  ErrorCode code_;
  std::size_t first_;
  std::size_t second_;
};

struct Location {
  double east = 0.0;
  double north = 0.0;

  friend bool operator==(const Location&, const Location&) = default;
};

struct SamplePoint {
  double east = 0.0;
  double north = 0.0;
  double value = 0.0;

  Location location() const noexcept { return {east, north}; }

  friend bool operator==(const SamplePoint&, const SamplePoint&) = default;
};

/// Validated, immutable, ordered collection of samples. The only way to get
/// one is through validate_samples(), so holding a SampleSet means the
/// invariants (non-empty, finite, distinct locations) hold.
class SampleSet {
 public:
  std::span<const SamplePoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const SamplePoint& operator[](std::size_t i) const { return points_[i]; }

  /// Measured values in sample order.
  std::vector<double> values() const;

  friend bool operator==(const SampleSet&, const SampleSet&) = default;

 private:
  friend SampleSet validate_samples(std::vector<SamplePoint> points);
  explicit SampleSet(std::vector<SamplePoint> points) : points_(std::move(points)) {}

  std::vector<SamplePoint> points_;
};

SampleSet validate_samples(std::vector<SamplePoint> points);

enum class CorrelogramFamily { Gaussian };

/// rho(h) = sill * exp(-3 (h / practical_range)^shape_exponent), rho(0) = sill.
class CorrelogramModel {
 public:
  CorrelogramModel() = default;
  CorrelogramModel(double sill, double practical_range, double shape_exponent);

  CorrelogramFamily family() const noexcept { return CorrelogramFamily::Gaussian; }
  double sill() const noexcept { return sill_; }
  double practical_range() const noexcept { return range_; }
  double shape_exponent() const noexcept { return shape_; }

  friend bool operator==(const CorrelogramModel&, const CorrelogramModel&) = default;

 private:
  double sill_ = 1.0;
  double range_ = 30.0;
  double shape_ = 2.0;
};

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  /// floor((max - min) / step) + 1, with a small relative allowance so that
  /// e.g. 100 / 0.1 counts 1001 nodes despite rounding in the quotient.
  std::size_t count() const noexcept;
  double node(std::size_t k) const noexcept { return min + static_cast<double>(k) * step; }

  friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

class GridSpec {
 public:
  GridSpec(AxisSpec east, AxisSpec north);

  const AxisSpec& east() const noexcept { return east_; }
  const AxisSpec& north() const noexcept { return north_; }
  std::size_t east_count() const noexcept { return east_.count(); }
  std::size_t north_count() const noexcept { return north_.count(); }
  std::size_t node_count() const noexcept { return east_count() * north_count(); }

  /// Node (i, j) where i indexes east and j indexes north.
  Location node(std::size_t i, std::size_t j) const noexcept {
    return {east_.node(i), north_.node(j)};
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  AxisSpec east_;
  AxisSpec north_;
};

struct KrigingSolution {
  std::vector<double> weights;
  double mu = 0.0;
  double objective = 0.0;
  Location target;
};

/// Result of one estimation. Target-free variants (GLS weights) leave
/// `node`, `mse` and `objective` empty.
struct EstimateReport {
  std::optional<Location> node;
  double mean = 0.0;
  double variance = 0.0;
  std::optional<double> mse;
  double mu = 0.0;
  std::optional<double> objective;
  std::vector<double> weights;
  bool negative_variance = false;

  friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

}  // namespace gridkrige
