#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "gridkrige/core.hpp"

namespace gridkrige::testing {

inline CorrelogramModel paper_model() { return CorrelogramModel(1.0, 30.0, 2.0); }

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double sum(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v;
  return s;
}

/// Random, well-separated sample sets for property tests.
inline SampleSet random_samples(std::mt19937_64& rng, std::size_t n, double extent = 100.0) {
  std::uniform_real_distribution<double> coord(0.0, extent);
  std::uniform_real_distribution<double> value(30.0, 45.0);
  std::vector<SamplePoint> pts;
  while (pts.size() < n) {
    SamplePoint p{coord(rng), coord(rng), value(rng)};
    const bool close = std::any_of(pts.begin(), pts.end(), [&](const SamplePoint& q) {
      return std::hypot(p.east - q.east, p.north - q.north) < 2.0;
    });
    if (!close) pts.push_back(p);
  }
  return validate_samples(std::move(pts));
}

/// Plain Gauss-Jordan elimination with full pivoting on a copy of `a`;
/// deliberately independent of the library's LU code.
inline std::vector<double> gauss_jordan_solve(std::vector<std::vector<double>> a,
                                              std::vector<double> b) {
  const std::size_t n = b.size();
  std::vector<std::size_t> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (std::abs(a[i][j]) > std::abs(a[pr][pc])) pr = i, pc = j;
    std::swap(a[k], a[pr]);
    std::swap(b[k], b[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);
    std::swap(col[k], col[pc]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[col[k]] = b[k] / a[k][k];
  return x;
}

}  // namespace gridkrige::testing
