#include "gridkrige/correlogram.hpp"

#include <cmath>
#include <string>

namespace gridkrige {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double distance(Location a, Location b) noexcept {
  const double de = a.east - b.east;
  const double dn = a.north - b.north;
  return std::sqrt(de * de + dn * dn);
}

namespace {

// Caller guarantees h >= 0.
inline double rho(const CorrelogramModel& model, double h) noexcept {
  if (h == 0.0) return model.sill();
  const double scaled = h / model.practical_range();
  const double power =
      model.shape_exponent() == 2.0 ? scaled * scaled : std::pow(scaled, model.shape_exponent());
  return model.sill() * std::exp(-3.0 * power);
}

}  // namespace

double evaluate(const CorrelogramModel& model, double h) {
  if (!(h >= 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::NegativeDistance,
                "correlogram lag must be finite and non-negative, got " + std::to_string(h));
  }
  return rho(model, h);
}

Matrix build_lambda(const SampleSet& samples, const CorrelogramModel& model) {
  const std::size_t n = samples.size();
  Matrix lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    lambda(i, i) = rho(model, 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = rho(model, distance(samples[i].location(), samples[j].location()));
      lambda(i, j) = c;
      lambda(j, i) = c;
    }
  }
  return lambda;
}

void build_r_into(const SampleSet& samples, Location target, const CorrelogramModel& model,
                  std::span<double> out) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out[i] = rho(model, distance(samples[i].location(), target));
  }
}

std::vector<double> build_r(const SampleSet& samples, Location target,
                            const CorrelogramModel& model) {
  if (!std::isfinite(target.east) || !std::isfinite(target.north)) {
    throw Error(ErrorCode::InvalidArgument, "target coordinates must be finite");
  }
  std::vector<double> r(samples.size());
  build_r_into(samples, target, model, r);
  return r;
}

}  // namespace gridkrige
