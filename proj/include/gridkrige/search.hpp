#pragma once

#include <cstddef>
#include <vector>

#include "gridkrige/core.hpp"

namespace gridkrige {

enum class SolvePath {
  Fast,    ///< factor Lambda once, block-eliminate the border per node
  Direct,  ///< full bordered LU per node; reference only, O(n^3) per node
};

struct SearchOptions {
  /// 0 picks std::thread::hardware_concurrency(); 1 runs on the calling thread.
  unsigned workers = 0;
  SolvePath path = SolvePath::Fast;
};

struct SearchResult {
  EstimateReport report;
  std::size_t east_index = 0;
  std::size_t north_index = 0;
  /// north_index * east_count + east_index
  std::size_t node_index = 0;
  std::size_t nodes_evaluated = 0;
  /// max over all evaluated nodes of |F' omega - 1|
  double max_unbiasedness_error = 0.0;
};

struct SurfacePoint {
  double east = 0.0;
  double north = 0.0;
  double objective = 0.0;
  double mean = 0.0;

  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

/// Surfaces larger than this are refused by the CLI.
inline constexpr std::size_t kMaxSurfaceNodes = 100'000'000;

/// Exhaustive scan for the node minimizing |omega' r + mu|. Ties on the
/// objective go to the smallest north, then the smallest east, so the result
/// does not depend on the worker count.
SearchResult grid_search(const SampleSet& samples, const CorrelogramModel& model,
                         const GridSpec& grid, const SearchOptions& options = {});

/// One point per node, north outer ascending, east inner ascending.
std::vector<SurfacePoint> objective_surface(const SampleSet& samples,
                                            const CorrelogramModel& model, const GridSpec& grid,
                                            const SearchOptions& options = {});

unsigned resolve_workers(unsigned requested) noexcept;

}  // namespace gridkrige
