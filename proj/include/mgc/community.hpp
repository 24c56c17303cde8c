#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mgc/multigraph.hpp"

namespace mgc {

// Partition of a node set into labeled clusters. Labels are canonicalized to
// contiguous integers 0..K-1 in order of first node appearance; no cluster is
// empty.
class Clustering {
 public:
  Clustering() = default;  // empty clustering; only valid as a placeholder
  Clustering(std::vector<std::string> nodes, const std::vector<int>& labels);

  static Clustering all_singletons(std::vector<std::string> nodes);
  static Clustering single_cluster(std::vector<std::string> nodes);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int cluster_count() const { return k_; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& clusters() const { return clusters_; }
  std::vector<int> cluster_sizes() const;

  int label_of(const std::string& node) const;
  bool same_node_set(const Clustering& other) const;

  // Labels of `other` reordered to this clustering's node order. Throws
  // SemanticMismatch when the node sets differ.
  std::vector<int> aligned_labels(const Clustering& other) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> clusters_;
  std::unordered_map<std::string, int> index_;
  int k_ = 0;
};

using Clusterer = std::function<Clustering(const Graph&)>;

// Weighted modularity, accumulated per community:
//   Q = sum_c [ w_in(c)/m - (D_c / 2m)^2 ]
// with m the total edge weight, w_in(c) the internal weight of community c
// and D_c its cumulative weighted degree.
double modularity(const Graph& g, const Clustering& c);

// Literal O(n^2) double-sum evaluation over ordered node pairs, used to
// validate the accumulation above. Capped at 64 nodes.
double modularity_oracle(const Graph& g, const Clustering& c);

// Agglomerative modularity maximization: start from singletons, repeatedly
// merge the connected cluster pair with maximum delta-Q (ties broken by the
// smallest (min,max) cluster-id pair), continue past negative gains until no
// connected pair remains, and return the best partition recorded along the
// merge sequence. Isolated nodes stay singletons.
Clustering cluster_greedy_modularity(const Graph& g);

}  // namespace mgc
