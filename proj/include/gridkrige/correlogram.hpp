#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gridkrige/core.hpp"

namespace gridkrige {

/// Dense row-major square matrix. Used for the autocorrelation matrix and
/// anything else the solvers need to factor.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

double distance(Location a, Location b) noexcept;

/// Correlation at lag h. Throws NegativeDistance for h < 0 or non-finite h.
double evaluate(const CorrelogramModel& model, double h);

/// Lambda(i, j) = rho(|x_i - x_j|).
Matrix build_lambda(const SampleSet& samples, const CorrelogramModel& model);

/// r_i = rho(|x_i - target|).
std::vector<double> build_r(const SampleSet& samples, Location target,
                            const CorrelogramModel& model);

/// Allocation-free variant for hot loops; `out` must have samples.size() entries.
void build_r_into(const SampleSet& samples, Location target, const CorrelogramModel& model,
                  std::span<double> out);

}  // namespace gridkrige
