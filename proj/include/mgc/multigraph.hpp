#pragma once

#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mgc/types.hpp"

namespace mgc {

// Undirected graph with a single nonnegative weight per edge. Zero-weight
// edges are dropped at construction; nodes may be isolated.
class Graph {
 public:
  struct Edge {
    int u, v;
    double w;
  };

  Graph(std::vector<std::string> nodes, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  double total_weight() const { return total_weight_; }

  // Weighted degree per node index.
  const std::vector<double>& strengths() const { return strengths_; }
  const std::vector<std::vector<std::pair<int, double>>>& adjacency() const {
    return adj_;
  }

  int node_index(const std::string& name) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::vector<double> strengths_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::unordered_map<std::string, int> index_;
  double total_weight_ = 0.0;
};

// Undirected graph whose edges carry one nonnegative weight per edge type.
// Immutable after construction; at most one edge per unordered node pair,
// no self loops, and every stored edge has at least one positive component.
class MultiGraph {
 public:
  MultiGraph(std::vector<std::string> nodes, std::vector<std::string> edge_types,
             std::vector<std::pair<int, int>> endpoints, Matrix weights);

  // Edges given by node name; the node set is the union of endpoints plus
  // `isolated`. Node order follows first appearance.
  static MultiGraph from_edges(
      std::vector<std::string> edge_types,
      const std::vector<std::tuple<std::string, std::string, Vector>>& edges,
      const std::vector<std::string>& isolated = {});

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int type_count() const { return static_cast<int>(edge_types_.size()); }
  int edge_count() const { return static_cast<int>(endpoints_.size()); }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<std::string>& edge_types() const { return edge_types_; }
  const std::vector<std::pair<int, int>>& endpoints() const { return endpoints_; }

  // edge_count() x type_count(); row e holds the per-type weights of edge e.
  const Matrix& weights() const { return weights_; }

  int node_index(const std::string& name) const;
  // Index of the named edge type; throws InvalidInput for unknown names.
  int type_index(const std::string& name) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<std::string> edge_types_;
  std::vector<std::pair<int, int>> endpoints_;
  Matrix weights_;
  std::unordered_map<std::string, int> index_;
};

// Rescales every edge type to unit L2 norm over the stored edges.
// Throws InvalidInput naming the type if a type is all-zero.
MultiGraph normalize_edge_types(const MultiGraph& g);

// Composite weight alpha . w per edge. With clamp_negative, negative
// composites become 0 and the edge is dropped; without it a negative
// composite is an error.
Graph aggregate_linear(const MultiGraph& g, const Vector& alpha,
                       bool clamp_negative);

// Composite weight w[a] * w[b]; edges where either factor is 0 are dropped.
// a == b is allowed (squares the type).
Graph aggregate_product(const MultiGraph& g, const std::string& type_a,
                        const std::string& type_b);

// Edge present iff w[a] > 0 or w[b] > 0, with weight max(w[a], w[b]).
Graph aggregate_union(const MultiGraph& g, const std::string& type_a,
                      const std::string& type_b);

// Single edge type as a Graph; equals aggregate_linear with a coordinate
// vector.
Graph extract_type(const MultiGraph& g, const std::string& type);

}  // namespace mgc
