#include "gridkrige/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

#include "gridkrige/correlogram.hpp"
#include "gridkrige/kriging.hpp"
#include "gridkrige/linalg.hpp"

namespace gridkrige {

unsigned resolve_workers(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Candidate {
  double objective = std::numeric_limits<double>::infinity();
  std::size_t north_index = std::numeric_limits<std::size_t>::max();
  std::size_t east_index = std::numeric_limits<std::size_t>::max();
  bool valid = false;
};

// Strict ordering: objective, then north, then east. NaN never wins.
bool better(const Candidate& a, const Candidate& b) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  if (a.objective != b.objective) return a.objective < b.objective;
  if (a.north_index != b.north_index) return a.north_index < b.north_index;
  return a.east_index < b.east_index;
}

/// Per-node solver with caller-owned scratch. Both paths fill `weights`
/// and return mu.
class NodeSolver {
 public:
  NodeSolver(const SampleSet& samples, const CorrelogramModel& model, SolvePath path)
      : samples_(samples), model_(model), path_(path), lambda_(build_lambda(samples, model)) {
    if (path_ == SolvePath::Fast) pre_.emplace(lambda_);
  }

  struct Scratch {
    explicit Scratch(std::size_t n) : r(n), weights(n) {}
    std::vector<double> r;
    std::vector<double> weights;
  };

  /// Returns mu; r and weights land in scratch.
  double solve(Location target, Scratch& scratch) const {
    build_r_into(samples_, target, model_, scratch.r);
    if (pre_) return solve_bordered_fast_into(*pre_, scratch.r, scratch.weights);
    KrigingSolution sol = solve_bordered_direct(lambda_, scratch.r);
    std::copy(sol.weights.begin(), sol.weights.end(), scratch.weights.begin());
    return sol.mu;
  }

  std::size_t size() const noexcept { return samples_.size(); }

 private:
  const SampleSet& samples_;
  const CorrelogramModel& model_;
  SolvePath path_;
  Matrix lambda_;
  std::optional<BorderedPrecompute> pre_;
};

/// Runs body(row_begin, row_end, worker) over contiguous blocks of north rows.
template <typename Body>
void for_row_blocks(std::size_t rows, unsigned workers, Body&& body) {
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(rows, 1)));
  if (workers <= 1) {
    body(std::size_t{0}, rows, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = rows * w / workers;
      const std::size_t end = rows * (w + 1) / workers;
      threads.emplace_back([&, begin, end, w] {
        try {
          body(begin, end, w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void require_nonempty(const GridSpec& grid) {
  if (grid.node_count() == 0) throw Error(ErrorCode::EmptyGrid, "grid has no nodes");
}

}  // namespace

SearchResult grid_search(const SampleSet& samples, const CorrelogramModel& model,
                         const GridSpec& grid, const SearchOptions& options) {
  require_nonempty(grid);
  const NodeSolver solver(samples, model, options.path);
  const std::size_t east_count = grid.east_count();
  const std::size_t north_count = grid.north_count();
  const unsigned workers = resolve_workers(options.workers);

  struct WorkerResult {
    Candidate best;
    double max_unbiasedness_error = 0.0;
  };
  std::vector<WorkerResult> partial(workers);

  for_row_blocks(north_count, workers, [&](std::size_t row_begin, std::size_t row_end,
                                           unsigned w) {
    NodeSolver::Scratch scratch(solver.size());
    WorkerResult local;
    for (std::size_t j = row_begin; j < row_end; ++j) {
      for (std::size_t i = 0; i < east_count; ++i) {
        const double mu = solver.solve(grid.node(i, j), scratch);
        double weight_sum = 0.0;
        double wr = 0.0;
        for (std::size_t k = 0; k < scratch.weights.size(); ++k) {
          weight_sum += scratch.weights[k];
          wr += scratch.weights[k] * scratch.r[k];
        }
        local.max_unbiasedness_error =
            std::max(local.max_unbiasedness_error, std::abs(weight_sum - 1.0));
        const double obj = std::abs(wr + mu);
        const Candidate c{obj, j, i, !std::isnan(obj)};
        if (better(c, local.best)) local.best = c;
      }
    }
    partial[w] = local;
  });

  SearchResult result;
  Candidate best;
  for (const auto& p : partial) {
    if (better(p.best, best)) best = p.best;
    result.max_unbiasedness_error = std::max(result.max_unbiasedness_error, p.max_unbiasedness_error);
  }
  if (!best.valid) throw Error(ErrorCode::SingularMatrix, "objective is undefined at every node");

  // Re-solve the winner on this thread to build the full report.
  NodeSolver::Scratch scratch(solver.size());
  KrigingSolution solution;
  solution.target = grid.node(best.east_index, best.north_index);
  solution.mu = solver.solve(solution.target, scratch);
  solution.weights = scratch.weights;
  solution.objective = objective(solution, scratch.r);

  result.report = make_report(solution, scratch.r, samples.values());
  result.east_index = best.east_index;
  result.north_index = best.north_index;
  result.node_index = best.north_index * east_count + best.east_index;
  result.nodes_evaluated = grid.node_count();
  return result;
}

std::vector<SurfacePoint> objective_surface(const SampleSet& samples,
                                            const CorrelogramModel& model, const GridSpec& grid,
                                            const SearchOptions& options) {
  require_nonempty(grid);
  const NodeSolver solver(samples, model, options.path);
  const auto values = samples.values();
  const std::size_t east_count = grid.east_count();
  std::vector<SurfacePoint> surface(grid.node_count());

  for_row_blocks(grid.north_count(), resolve_workers(options.workers),
                 [&](std::size_t row_begin, std::size_t row_end, unsigned) {
                   NodeSolver::Scratch scratch(solver.size());
                   for (std::size_t j = row_begin; j < row_end; ++j) {
                     for (std::size_t i = 0; i < east_count; ++i) {
                       const Location node = grid.node(i, j);
                       const double mu = solver.solve(node, scratch);
                       double wr = 0.0;
                       double wv = 0.0;
                       for (std::size_t k = 0; k < scratch.weights.size(); ++k) {
                         wr += scratch.weights[k] * scratch.r[k];
                         wv += scratch.weights[k] * values[k];
                       }
                       surface[j * east_count + i] = {node.east, node.north, std::abs(wr + mu), wv};
                     }
                   }
                 });
  return surface;
}

}  // namespace gridkrige
