#include "mgc/multigraph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "mgc/errors.hpp"

namespace mgc {

namespace {

std::uint64_t pair_key(int u, int v) {
  const auto lo = static_cast<std::uint64_t>(std::min(u, v));
  const auto hi = static_cast<std::uint64_t>(std::max(u, v));
  return (hi << 32) | lo;
}

}  // namespace

Graph::Graph(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)) {
  index_.reserve(nodes_.size());
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (!index_.emplace(nodes_[i], i).second)
      throw InvalidInput("duplicate node id: " + nodes_[i]);
  }
  strengths_.assign(nodes_.size(), 0.0);
  adj_.resize(nodes_.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size());
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count() || e.v >= node_count())
      throw InvalidInput("edge endpoint out of range");
    if (e.u == e.v)
      throw InvalidInput("self-loop on node " + nodes_[e.u]);
    if (!std::isfinite(e.w)) throw InvalidInput("non-finite edge weight");
    if (e.w < 0.0)
      throw InvalidInput("negative edge weight between " + nodes_[e.u] +
                         " and " + nodes_[e.v]);
    if (e.w == 0.0) continue;
    if (!seen.insert(pair_key(e.u, e.v)).second)
      throw InvalidInput("duplicate edge " + nodes_[e.u] + " -- " + nodes_[e.v]);
    edges_.push_back(e);
    strengths_[e.u] += e.w;
    strengths_[e.v] += e.w;
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
    total_weight_ += e.w;
  }
}

int Graph::node_index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

MultiGraph::MultiGraph(std::vector<std::string> nodes,
                       std::vector<std::string> edge_types,
                       std::vector<std::pair<int, int>> endpoints, Matrix weights)
    : nodes_(std::move(nodes)),
      edge_types_(std::move(edge_types)),
      endpoints_(std::move(endpoints)),
      weights_(std::move(weights)) {
  if (edge_types_.empty()) throw InvalidInput("a multigraph needs k >= 1 edge types");
  {
    std::unordered_set<std::string> names(edge_types_.begin(), edge_types_.end());
    if (names.size() != edge_types_.size())
      throw InvalidInput("duplicate edge type name");
  }
  index_.reserve(nodes_.size());
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (!index_.emplace(nodes_[i], i).second)
      throw InvalidInput("duplicate node id: " + nodes_[i]);
  }
  if (weights_.rows() != static_cast<Eigen::Index>(endpoints_.size()) ||
      weights_.cols() != static_cast<Eigen::Index>(edge_types_.size()))
    throw InvalidInput("weight matrix shape does not match edges x types");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(endpoints_.size());
  for (Eigen::Index e = 0; e < weights_.rows(); ++e) {
    const auto [u, v] = endpoints_[static_cast<std::size_t>(e)];
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
      throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop on node " + nodes_[u]);
    if (!seen.insert(pair_key(u, v)).second)
      throw InvalidInput("duplicate edge " + nodes_[u] + " -- " + nodes_[v]);
    bool any_positive = false;
    for (Eigen::Index t = 0; t < weights_.cols(); ++t) {
      const double w = weights_(e, t);
      if (!std::isfinite(w))
        throw InvalidInput("non-finite weight on edge " + nodes_[u] + " -- " +
                           nodes_[v]);
      if (w < 0.0)
        throw InvalidInput("negative weight on edge " + nodes_[u] + " -- " +
                           nodes_[v]);
      any_positive |= w > 0.0;
    }
    if (!any_positive)
      throw InvalidInput("all-zero weight vector on edge " + nodes_[u] + " -- " +
                         nodes_[v]);
  }
}

MultiGraph MultiGraph::from_edges(
    std::vector<std::string> edge_types,
    const std::vector<std::tuple<std::string, std::string, Vector>>& edges,
    const std::vector<std::string>& isolated) {
  const int k = static_cast<int>(edge_types.size());
  std::vector<std::string> nodes;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<int>(nodes.size()));
    if (inserted) nodes.push_back(name);
    return it->second;
  };
  std::vector<std::pair<int, int>> endpoints;
  Matrix weights(edges.size(), k);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [u, v, w] = edges[e];
    if (w.size() != k)
      throw InvalidInput("edge " + u + " -- " + v + " carries " +
                         std::to_string(w.size()) + " weights, expected " +
                         std::to_string(k));
    const int ui = intern(u);  // sequenced: u is interned before v
    const int vi = intern(v);
    endpoints.emplace_back(ui, vi);
    weights.row(static_cast<Eigen::Index>(e)) = w.transpose();
  }
  for (const auto& name : isolated) intern(name);
  return MultiGraph(std::move(nodes), std::move(edge_types),
                    std::move(endpoints), std::move(weights));
}

int MultiGraph::node_index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int MultiGraph::type_index(const std::string& name) const {
  for (int t = 0; t < type_count(); ++t)
    if (edge_types_[t] == name) return t;
  throw InvalidInput("unknown edge type: " + name);
}

MultiGraph normalize_edge_types(const MultiGraph& g) {
  if (g.edge_count() == 0) throw InvalidInput("cannot normalize an empty multigraph");
  Matrix w = g.weights();
  for (Eigen::Index t = 0; t < w.cols(); ++t) {
    const double norm = w.col(t).norm();
    if (norm == 0.0)
      throw InvalidInput("edge type '" + g.edge_types()[t] + "' is all-zero");
    w.col(t) /= norm;
  }
  return MultiGraph(g.nodes(), g.edge_types(), g.endpoints(), std::move(w));
}

Graph aggregate_linear(const MultiGraph& g, const Vector& alpha,
                       bool clamp_negative) {
  if (alpha.size() != g.type_count())
    throw SemanticMismatch("weight vector has dimension " +
                           std::to_string(alpha.size()) + ", graph has " +
                           std::to_string(g.type_count()) + " edge types");
  const Vector composite = g.weights() * alpha;
  std::vector<Graph::Edge> edges;
  edges.reserve(g.edge_count());
  for (Eigen::Index e = 0; e < composite.size(); ++e) {
    double w = composite[e];
    if (w < 0.0) {
      if (!clamp_negative) {
        const auto [u, v] = g.endpoints()[static_cast<std::size_t>(e)];
        throw InvalidInput("negative composite weight on edge " + g.nodes()[u] +
                           " -- " + g.nodes()[v] + " (pass clamp to truncate)");
      }
      w = 0.0;
    }
    if (w > 0.0) {
      const auto [u, v] = g.endpoints()[static_cast<std::size_t>(e)];
      edges.push_back({u, v, w});
    }
  }
  return Graph(g.nodes(), std::move(edges));
}

Graph aggregate_product(const MultiGraph& g, const std::string& type_a,
                        const std::string& type_b) {
  const int a = g.type_index(type_a);
  const int b = g.type_index(type_b);
  std::vector<Graph::Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const double w = g.weights()(e, a) * g.weights()(e, b);
    if (w > 0.0) {
      const auto [u, v] = g.endpoints()[e];
      edges.push_back({u, v, w});
    }
  }
  return Graph(g.nodes(), std::move(edges));
}

Graph aggregate_union(const MultiGraph& g, const std::string& type_a,
                      const std::string& type_b) {
  const int a = g.type_index(type_a);
  const int b = g.type_index(type_b);
  std::vector<Graph::Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const double w = std::max(g.weights()(e, a), g.weights()(e, b));
    if (w > 0.0) {
      const auto [u, v] = g.endpoints()[e];
      edges.push_back({u, v, w});
    }
  }
  return Graph(g.nodes(), std::move(edges));
}

Graph extract_type(const MultiGraph& g, const std::string& type) {
  Vector alpha = Vector::Zero(g.type_count());
  alpha[g.type_index(type)] = 1.0;
  return aggregate_linear(g, alpha, false);
}

}  // namespace mgc
