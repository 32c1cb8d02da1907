#include "gridkrige/kriging.hpp"

#include <cmath>
#include <string>

namespace gridkrige {

namespace {

void require_same_length(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "weights have " + std::to_string(a.size()) +
                                               " entries but values have " +
                                               std::to_string(b.size()));
  }
}

}  // namespace

double objective(const KrigingSolution& solution, std::span<const double> r) {
  return std::abs(dot(solution.weights, r) + solution.mu);
}

double estimate_mean(std::span<const double> weights, std::span<const double> values) {
  require_same_length(weights, values);
  return dot(weights, values);
}

double estimate_variance(std::span<const double> weights, std::span<const double> values,
                         double mean) {
  require_same_length(weights, values);
  double second_moment = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    second_moment += weights[i] * (values[i] * values[i]);
  }
  return second_moment - mean * mean;
}

double mse_mean(double variance, const KrigingSolution& solution, std::span<const double> r) {
  return variance * (dot(solution.weights, r) - solution.mu);
}

EstimateReport make_report(const KrigingSolution& solution, std::span<const double> r,
                           std::span<const double> values) {
  EstimateReport report;
  report.node = solution.target;
  report.mean = estimate_mean(solution.weights, values);
  report.variance = estimate_variance(solution.weights, values, report.mean);
  report.mse = mse_mean(report.variance, solution, r);
  report.mu = solution.mu;
  report.objective = objective(solution, r);
  report.weights = solution.weights;
  report.negative_variance = report.variance < 0.0;
  return report;
}

EstimateReport estimate_at(const SampleSet& samples, const CorrelogramModel& model,
                           Location target) {
  const auto r = build_r(samples, target, model);
  const BorderedPrecompute pre(build_lambda(samples, model));
  KrigingSolution solution = solve_bordered_fast(pre, r);
  solution.target = target;
  return make_report(solution, r, samples.values());
}

EstimateReport estimate_gls(const SampleSet& samples, const Matrix& lambda) {
  if (lambda.size() != samples.size()) {
    throw Error(ErrorCode::LengthMismatch, "correlation matrix does not match sample count");
  }
  const BorderedPrecompute pre(lambda);
  const auto values = samples.values();

  EstimateReport report;
  report.weights = gls_weights(pre);
  report.mean = estimate_mean(report.weights, values);
  report.variance = estimate_variance(report.weights, values, report.mean);
  report.mu = -1.0 / pre.s();
  report.negative_variance = report.variance < 0.0;
  return report;
}

EstimateReport estimate_gls(const SampleSet& samples, const CorrelogramModel& model) {
  return estimate_gls(samples, build_lambda(samples, model));
}

}  // namespace gridkrige
