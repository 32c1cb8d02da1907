#pragma once

#include <span>
#include <vector>

#include "gridkrige/core.hpp"
#include "gridkrige/correlogram.hpp"
#include "gridkrige/linalg.hpp"

namespace gridkrige {

/// |omega' r + mu|; zero exactly when the kriging-variance condition holds.
double objective(const KrigingSolution& solution, std::span<const double> r);

/// m = omega' v
double estimate_mean(std::span<const double> weights, std::span<const double> values);

/// sigma^2 = omega' (v*v) - m^2, elementwise square, returned unclamped.
double estimate_variance(std::span<const double> weights, std::span<const double> values,
                         double mean);

/// MSE(m) = sigma^2 (omega' r - mu)
double mse_mean(double variance, const KrigingSolution& solution, std::span<const double> r);

/// Fills a full report from a solved system at `solution.target`.
EstimateReport make_report(const KrigingSolution& solution, std::span<const double> r,
                           std::span<const double> values);

EstimateReport estimate_at(const SampleSet& samples, const CorrelogramModel& model,
                           Location target);

/// Report for the generalized least-squares weights Lambda^-1 F / (F' Lambda^-1 F).
/// No target exists, so node, mse and objective are empty; mu is -1/s, the
/// multiplier the bordered system yields for a zero correlation vector.
EstimateReport estimate_gls(const SampleSet& samples, const CorrelogramModel& model);

/// As above with a caller-supplied Lambda (e.g. the identity).
EstimateReport estimate_gls(const SampleSet& samples, const Matrix& lambda);

}  // namespace gridkrige
