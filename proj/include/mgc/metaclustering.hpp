#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgc/community.hpp"
#include "mgc/metrics.hpp"
#include "mgc/multigraph.hpp"

namespace mgc {

// Clusterings of one node universe tagged with the weight vector that
// produced each. Parallel arrays; warnings are empty strings when clean.
struct Ensemble {
  std::vector<std::string> node_universe;
  std::vector<Vector> alphas;
  std::vector<Clustering> clusterings;
  std::vector<std::string> warnings;
  std::uint64_t seed = 0;  // sampling seed, recorded in the manifest

  int size() const { return static_cast<int>(clusterings.size()); }
};

// n unit weight vectors: i.i.d. components uniform on (-1,1), normalized;
// degenerate draws redrawn. Deterministic per seed.
std::vector<Vector> sample_alphas(int k, int n, std::uint64_t seed);

// Clamp-aggregate and cluster at every alpha. Zero-weight aggregates yield
// the all-singletons clustering with a warning tag.
Ensemble sample_clustering_space(const MultiGraph& g,
                                 const std::vector<Vector>& alphas,
                                 const Clusterer& clusterer);

// Complete graph over ensemble indices, w_ij = 1 / (d_VI + delta) with
// delta = 0.01 ln n; identical clusterings get the maximal weight 1/delta.
Graph build_meta_graph(const Ensemble& e);

// Clusters the graph of clusterings; the returned partition is over ensemble
// indices (node names "s000", "s001", ...).
Clustering metacluster(const Ensemble& e, const Clusterer& clusterer);

// CSPA consensus: cluster the co-occurrence graph whose weight on (u,v) is
// the number of clusterings placing u and v together. All-singleton inputs
// give an all-singleton consensus.
Clustering cspa_consensus(const std::vector<Clustering>& cs,
                          const Clusterer& clusterer);

enum class OrderMode { exact, greedy };

struct Ordering {
  std::vector<int> order;      // indices into the input list, selection order
  std::vector<double> scores;  // set-wise information of each prefix
};

// exact: greedily grow the prefix maximizing set-wise information (allowed
// for up to 8 clusterings). greedy: seed with the farthest pair under VI,
// then add the candidate maximizing the minimum distance to the chosen set.
Ordering order_representatives(const std::vector<Clustering>& cs, OrderMode mode);

// Average-linkage dendrogram leaf order over pairwise VI, for displaying the
// VI matrix with diagonal blocks contiguous.
std::vector<int> seriate(const Ensemble& e);

// Maximal node groups (size >= 2) co-clustered in every ensemble entry.
std::vector<std::vector<std::string>> invariant_groups(const Ensemble& e);

inline Matrix vi_matrix(const Ensemble& e) {
  return vi_matrix(e.clusterings);
}

struct MetaClusteringReport {
  Clustering meta_partition;  // over ensemble indices, before dropping
  std::vector<int> kept_meta_labels;
  std::vector<int> dropped_meta_labels;
  std::vector<Clustering> representatives;  // ordered
  std::vector<int> representative_sizes;    // member counts, same order
  std::vector<double> ordering_scores;
  std::vector<int> seriation;
};

// Full pipeline over an existing ensemble: meta-cluster, drop meta-clusters
// smaller than drop_fraction of the ensemble, CSPA each survivor, order the
// representatives by set-wise information (exact mode up to 8, else greedy).
MetaClusteringReport metacluster_report(const Ensemble& e,
                                        const Clusterer& clusterer,
                                        double drop_fraction = 0.03);

}  // namespace mgc
