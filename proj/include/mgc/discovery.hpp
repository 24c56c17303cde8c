#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgc/community.hpp"
#include "mgc/multigraph.hpp"
#include "mgc/optimizer.hpp"

namespace mgc {

// One candidate unexpected clustering and its scores. scalarized =
// modularity + lambda * min(vi_to_given) / ln n.
struct DiscoveryReport {
  Vector alpha;
  Clustering clustering;
  double modularity = 0.0;
  std::vector<double> vi_to_given;
  double scalarized = 0.0;
  bool empty_aggregate = false;
  bool low_novelty = false;
};

// Aggregate with clamping, cluster, and score quality plus novelty against
// every given clustering. A zero-weight aggregate scores -infinity.
std::pair<double, DiscoveryReport> unexpected_objective(
    const MultiGraph& g, const Vector& alpha,
    const std::vector<Clustering>& given, const Clusterer& clusterer,
    double lambda);

// Multistart pattern search over the box [-1,1]^k maximizing
// unexpected_objective with cfg.lambda.
DiscoveryReport find_unexpected(const MultiGraph& g,
                                const std::vector<Clustering>& given,
                                const SearchConfig& cfg,
                                const Clusterer& clusterer);

struct PairTableRow {
  std::string label;                 // "t" or "a*b"
  std::optional<double> modularity;  // nullopt for an empty product graph
  double vi_to_reference;
};

// One row per singleton type (when include_singletons) and per unordered
// type pair, sorted by VI to the reference descending.
std::vector<PairTableRow> enumerate_pairs(const MultiGraph& g,
                                          const Clustering& reference,
                                          const Clusterer& clusterer,
                                          bool include_singletons);

struct DistantPick {
  int index;            // into the candidate list
  double min_distance;  // min VI to reference + earlier picks at selection
};

// Greedy max-min selection seeded with the reference: repeatedly add the
// candidate farthest (in minimum VI) from everything already selected.
std::vector<DistantPick> select_distant_set(
    const std::vector<Clustering>& candidates, const Clustering& reference,
    int m);

}  // namespace mgc
