#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gridkrige/core.hpp"
#include "gridkrige/correlogram.hpp"

namespace gridkrige {

/// Pivots below this fraction of the largest pivot seen are treated as zero.
inline constexpr double kSingularTolerance = 1e-12;

/// LU factorization with partial (row) pivoting: P A = L U, with L unit lower
/// triangular. L and U share one packed matrix.
class LuFactorization {
 public:
  /// Throws Error(SingularMatrix, index) on a sub-tolerance pivot.
  explicit LuFactorization(const Matrix& a);

  std::size_t size() const noexcept { return lu_.size(); }

  /// min |pivot| / max |pivot|; a cheap conditioning diagnostic.
  double reciprocal_pivot_ratio() const noexcept { return pivot_ratio_; }

  std::vector<double> solve(std::span<const double> b) const;

  /// x = A^-1 b without allocating. b and x must not overlap.
  void solve_into(std::span<const double> b, std::span<double> x) const;

  /// In-place: x holds b on entry and the solution on exit.
  void solve_in_place(std::span<double> x) const;

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
  double pivot_ratio_ = 1.0;
};

LuFactorization factorize(const Matrix& lambda);

/// Everything the block-eliminated bordered solve needs that does not depend
/// on the target: the factored Lambda, w = Lambda^-1 F and s = F' w.
class BorderedPrecompute {
 public:
  explicit BorderedPrecompute(const Matrix& lambda);

  const LuFactorization& factorization() const noexcept { return lu_; }
  std::span<const double> w() const noexcept { return w_; }
  double s() const noexcept { return s_; }
  std::size_t size() const noexcept { return w_.size(); }

 private:
  LuFactorization lu_;
  std::vector<double> w_;
  double s_ = 0.0;
};

/// Solves [[Lambda, F], [F', 0]] [w; mu] = [r; 1] with one pivoted LU of the
/// full bordered matrix. Reference path; O(n^3) per call.
KrigingSolution solve_bordered_direct(const Matrix& lambda, std::span<const double> r);

/// Same contract as solve_bordered_direct via block elimination:
///   y = Lambda^-1 r,  mu = (F'y - 1) / s,  omega = y - mu w.
KrigingSolution solve_bordered_fast(const BorderedPrecompute& pre, std::span<const double> r);

/// Allocation-free fast solve. `weights` must have pre.size() entries and
/// receives omega; returns mu. Safe to call concurrently on a shared `pre`.
double solve_bordered_fast_into(const BorderedPrecompute& pre, std::span<const double> r,
                                std::span<double> weights);

/// omega = Lambda^-1 F / (F' Lambda^-1 F).
std::vector<double> gls_weights(const BorderedPrecompute& pre);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace gridkrige
