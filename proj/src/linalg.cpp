#include "gridkrige/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace gridkrige {

namespace {

[[noreturn]] void throw_singular(std::size_t index) {
  throw Error(ErrorCode::SingularMatrix,
              "matrix is singular to working precision at pivot " + std::to_string(index), index);
}

void check_length(std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw Error(ErrorCode::LengthMismatch, "vector length " + std::to_string(actual) +
                                               " does not match system size " +
                                               std::to_string(expected));
  }
}

}  // namespace

LuFactorization::LuFactorization(const Matrix& a) : lu_(a), perm_(a.size()) {
  const std::size_t n = lu_.size();
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  double max_pivot = 0.0;
  double min_pivot = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    max_pivot = std::max(max_pivot, best);
    if (!(best > kSingularTolerance * max_pivot) || !std::isfinite(best)) throw_singular(k);
    min_pivot = k == 0 ? best : std::min(min_pivot, best);

    if (p != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
      std::swap(perm_[k], perm_[p]);
    }

    const double pivot = lu_(k, k);
    const auto pivot_row = lu_.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      auto row = lu_.row(i);
      const double factor = row[k] / pivot;
      row[k] = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) row[j] -= factor * pivot_row[j];
    }
  }
  pivot_ratio_ = n == 0 ? 1.0 : min_pivot / max_pivot;
}

void LuFactorization::solve_into(std::span<const double> b, std::span<double> x) const {
  const std::size_t n = size();
  check_length(n, b.size());
  check_length(n, x.size());

  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 1; i < n; ++i) {
    const auto row = lu_.row(i);
    double acc = x[i];
    for (std::size_t j = 0; j < i; ++j) acc -= row[j] * x[j];
    x[i] = acc;
  }
  for (std::size_t i = n; i-- > 0;) {
    const auto row = lu_.row(i);
    double acc = x[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= row[j] * x[j];
    x[i] = acc / row[i];
  }
}

void LuFactorization::solve_in_place(std::span<double> x) const {
  const std::vector<double> b(x.begin(), x.end());
  solve_into(b, x);
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const {
  std::vector<double> x(b.begin(), b.end());
  solve_in_place(x);
  return x;
}

LuFactorization factorize(const Matrix& lambda) { return LuFactorization(lambda); }

BorderedPrecompute::BorderedPrecompute(const Matrix& lambda)
    : lu_(lambda), w_(lambda.size(), 1.0) {
  lu_.solve_in_place(w_);
  s_ = std::accumulate(w_.begin(), w_.end(), 0.0);
  double scale = 0.0;
  for (double v : w_) scale += std::abs(v);
  // s = 0 makes the bordered matrix singular (its last pivot).
  if (!(std::abs(s_) > kSingularTolerance * scale) || !std::isfinite(s_)) {
    throw_singular(lambda.size());
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  check_length(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

KrigingSolution solve_bordered_direct(const Matrix& lambda, std::span<const double> r) {
  const std::size_t n = lambda.size();
  check_length(n, r.size());

  Matrix bordered(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) bordered(i, j) = lambda(i, j);
    bordered(i, n) = 1.0;
    bordered(n, i) = 1.0;
  }
  bordered(n, n) = 0.0;

  std::vector<double> rhs(r.begin(), r.end());
  rhs.push_back(1.0);
  LuFactorization(bordered).solve_in_place(rhs);

  KrigingSolution sol;
  sol.mu = rhs[n];
  rhs.pop_back();
  sol.weights = std::move(rhs);
  sol.objective = std::abs(dot(sol.weights, r) + sol.mu);
  return sol;
}

double solve_bordered_fast_into(const BorderedPrecompute& pre, std::span<const double> r,
                                std::span<double> weights) {
  const std::size_t n = pre.size();
  check_length(n, r.size());
  check_length(n, weights.size());

  pre.factorization().solve_into(r, weights);
  double ones_dot_y = 0.0;
  for (double y : weights) ones_dot_y += y;
  const double mu = (ones_dot_y - 1.0) / pre.s();
  const auto w = pre.w();
  for (std::size_t i = 0; i < n; ++i) weights[i] -= mu * w[i];
  return mu;
}

KrigingSolution solve_bordered_fast(const BorderedPrecompute& pre, std::span<const double> r) {
  KrigingSolution sol;
  sol.weights.resize(pre.size());
  sol.mu = solve_bordered_fast_into(pre, r, sol.weights);
  sol.objective = std::abs(dot(sol.weights, r) + sol.mu);
  return sol;
}

std::vector<double> gls_weights(const BorderedPrecompute& pre) {
  std::vector<double> out(pre.w().begin(), pre.w().end());
  for (double& v : out) v /= pre.s();
  return out;
}

}  // namespace gridkrige
