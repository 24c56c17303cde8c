#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "mgc/types.hpp"

namespace mgc {

// Parameters shared by the search-driven pipelines. `lambda` is the
// quality/novelty trade-off used by discovery; `steepness` the arctangent
// parameter of the holding-power objective.
struct SearchConfig {
  std::uint64_t seed = 0;
  int n_samples = 50;
  int n_starts = 8;
  double initial_step = 0.25;
  double step_tolerance = 1e-4;
  long max_evaluations = 5000;
  double contraction = 0.5;
  double lambda = 1.0;
  double steepness = 1.0;

  void validate() const;
};

// key=value file, one entry per line, '#' comments. Unknown keys are errors.
SearchConfig load_config(const std::filesystem::path& path);
SearchConfig parse_config_text(const std::string& text);
std::string dump_config(const SearchConfig& cfg);

struct Domain {
  enum class Kind { sphere, box };
  Kind kind = Kind::sphere;
  double lo = -1.0;
  double hi = 1.0;

  static Domain sphere() { return {Kind::sphere, -1.0, 1.0}; }
  static Domain box(double lo, double hi) { return {Kind::box, lo, hi}; }
};

struct SearchResult {
  Vector best_point;
  double best_value = 0.0;
  long evaluations = 0;
  bool converged = false;
  // Incumbent value after each objective evaluation; nondecreasing.
  std::vector<double> incumbent_trace;
};

using Objective = std::function<double(const Vector&)>;

// Maximizing compass search. Polls +/-step along each coordinate in fixed
// order (0..d-1, + before -), accepts the first strict improvement, contracts
// the step on a full failed round, and stops at step < step_tolerance or at
// the evaluation budget. Sphere domains project every candidate to unit norm
// before evaluation; box domains clamp to [lo,hi]. The 1-d sphere is the
// finite set {-1,+1} and is polled exhaustively.
SearchResult pattern_search(const Objective& f, const Vector& start,
                            const Domain& domain, const SearchConfig& cfg,
                            long budget_override = -1);

// The seeded random start points multistart will use (for reproducibility and
// parity tests).
std::vector<Vector> multistart_start_points(int dim, const Domain& domain,
                                            const SearchConfig& cfg);

// Runs pattern_search from every warm start followed by cfg.n_starts seeded
// random starts, sharing one evaluation budget; returns the best result with
// total evaluation count. converged is false if the budget cut a run short.
SearchResult multistart(const Objective& f, int dim, const Domain& domain,
                        const SearchConfig& cfg,
                        const std::vector<Vector>& warm_starts = {});

}  // namespace mgc
