#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgc/community.hpp"
#include "mgc/multigraph.hpp"
#include "mgc/optimizer.hpp"

namespace mgc {

// Per-node holding powers under one aggregation.
struct HoldingReport {
  Vector per_node;           // by node index of the subject multigraph
  double positive_fraction;  // |{v : H(v) > 0}| / n, exact
  double objective_value;    // sum_v arctan(steepness * H(v))
  double steepness;
};

// Sum of clamped composite weights of edges from v into cluster `label`.
double pull(const MultiGraph& g, const Vector& alpha, const Clustering& c,
            const std::string& node, int label);

// Pull to the node's own cluster minus the strongest competing pull; the
// competing pull is 0 when no other cluster exists.
double holding_power(const MultiGraph& g, const Vector& alpha,
                     const Clustering& c, const std::string& node);

// Precomputed adjacency + labels so one construction serves many alpha
// evaluations (each evaluation is O(|E|)).
class HoldingEvaluator {
 public:
  HoldingEvaluator(const MultiGraph& g, const Clustering& c);

  Vector powers(const Vector& alpha) const;
  double objective(const Vector& alpha, double steepness) const;
  double positive_fraction(const Vector& alpha) const;
  HoldingReport report(const Vector& alpha, double steepness) const;

 private:
  Matrix weights_;                       // |E| x k
  std::vector<int> offsets_;             // CSR over nodes
  std::vector<int> neighbor_;            // neighbor node per slot
  std::vector<int> edge_of_;             // edge row per slot
  std::vector<int> labels_;
  int n_clusters_;
};

double arctan_objective(const MultiGraph& g, const Vector& alpha,
                        const Clustering& c, double steepness);

HoldingReport holding_report(const MultiGraph& g, const Vector& alpha,
                             const Clustering& c, double steepness);

// Cut objective value alpha . S and the per-type cut sums S (unclamped, so
// the value is exactly linear in alpha).
struct CutObjective {
  double value;
  Vector per_type_cut;
};

CutObjective cut_objective(const MultiGraph& g, const Vector& alpha,
                           const Clustering& c);

// Clamp-aggregate then cluster; a zero-weight aggregate yields the
// all-singletons clustering (and sets *zero_aggregate).
Clustering forward_clustering(const MultiGraph& g, const Vector& alpha,
                              const Clusterer& clusterer,
                              bool* zero_aggregate = nullptr);

// VI distance of the forward clustering under alpha to the ground truth;
// lower is better.
double inverse_objective(const MultiGraph& g, const Vector& alpha,
                         const Clustering& truth, const Clusterer& clusterer);

struct RecoveryResult {
  Vector alpha;
  HoldingReport report;
  bool improved;  // false when the budget ran out before any improving step
  long evaluations;
};

// Maximizes the arctan objective over the unit sphere: evaluates the k
// coordinate vectors plus cfg.n_starts seeded sphere samples, then runs
// pattern search from the best. Never returns a point below the best
// initialization point.
RecoveryResult recover_weights(const MultiGraph& g, const Clustering& truth,
                               const SearchConfig& cfg);

struct ParetoPoint {
  Vector alpha;
  double positive_fraction;
  double normalized_modularity;
};

// Strictly dominated points removed, survivors sorted by positive_fraction.
std::vector<ParetoPoint> pareto_frontier(const std::vector<ParetoPoint>& points);

// Nondominated (positive_fraction, normalized modularity of the ground truth)
// points over sampled and optimized weight vectors, sorted by
// positive_fraction. Modularity is normalized by the value under
// reference_alpha when given, else by the maximum observed value.
std::vector<ParetoPoint> pareto_sweep(const MultiGraph& g,
                                      const Clustering& truth,
                                      const SearchConfig& cfg,
                                      const Vector* reference_alpha = nullptr);

struct CorrelationPoint {
  double steepness;
  std::optional<double> correlation;  // nullopt when variance degenerates
};

// Pearson correlation between the arctan objective and the negated VI of
// forward clusterings to the truth, over cfg.n_samples shared sphere samples,
// one point per steepness.
std::vector<CorrelationPoint> correlation_sweep(
    const MultiGraph& g, const Clustering& truth, const Clusterer& clusterer,
    const std::vector<double>& steepness_grid, const SearchConfig& cfg);

}  // namespace mgc
