#include "mgc/community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgc/errors.hpp"

namespace mgc {

Clustering::Clustering(std::vector<std::string> nodes,
                       const std::vector<int>& labels)
    : nodes_(std::move(nodes)) {
  if (nodes_.size() != labels.size())
    throw InvalidInput("clustering label count does not match node count");
  index_.reserve(nodes_.size());
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (!index_.emplace(nodes_[i], i).second)
      throw InvalidInput("duplicate node id in clustering: " + nodes_[i]);
  }
  // Canonicalize: relabel to 0..K-1 in order of first appearance.
  labels_.resize(nodes_.size());
  std::unordered_map<int, int> canon;
  canon.reserve(nodes_.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = canon.emplace(labels[i], k_);
    if (inserted) ++k_;
    labels_[i] = it->second;
  }
  clusters_.resize(k_);
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
    clusters_[labels_[i]].push_back(i);
}

Clustering Clustering::all_singletons(std::vector<std::string> nodes) {
  std::vector<int> labels(nodes.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
  return Clustering(std::move(nodes), labels);
}

Clustering Clustering::single_cluster(std::vector<std::string> nodes) {
  std::vector<int> labels(nodes.size(), 0);
  return Clustering(std::move(nodes), labels);
}

std::vector<int> Clustering::cluster_sizes() const {
  std::vector<int> sizes(k_);
  for (int c = 0; c < k_; ++c) sizes[c] = static_cast<int>(clusters_[c].size());
  return sizes;
}

int Clustering::label_of(const std::string& node) const {
  auto it = index_.find(node);
  if (it == index_.end())
    throw SemanticMismatch("node not in clustering: " + node);
  return labels_[it->second];
}

bool Clustering::same_node_set(const Clustering& other) const {
  if (node_count() != other.node_count()) return false;
  for (const auto& name : other.nodes_)
    if (index_.find(name) == index_.end()) return false;
  return true;
}

std::vector<int> Clustering::aligned_labels(const Clustering& other) const {
  if (node_count() != other.node_count())
    throw SemanticMismatch("clusterings cover different node sets");
  std::vector<int> aligned(nodes_.size());
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    auto it = other.index_.find(nodes_[i]);
    if (it == other.index_.end())
      throw SemanticMismatch("clusterings cover different node sets (missing " +
                             nodes_[i] + ")");
    aligned[i] = other.labels_[it->second];
  }
  return aligned;
}

namespace {

// Labels of clustering c by g's node index; throws on any mismatch.
std::vector<int> labels_for_graph(const Graph& g, const Clustering& c) {
  if (g.node_count() != c.node_count())
    throw SemanticMismatch("clustering covers " + std::to_string(c.node_count()) +
                           " nodes, graph has " + std::to_string(g.node_count()));
  if (g.nodes() == c.nodes()) return c.labels();
  std::vector<int> labels(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) labels[i] = c.label_of(g.nodes()[i]);
  return labels;
}

}  // namespace

double modularity(const Graph& g, const Clustering& c) {
  const std::vector<int> labels = labels_for_graph(g, c);
  const double m = g.total_weight();
  if (m <= 0.0) throw InvalidInput("modularity undefined: graph has zero total weight");
  std::vector<double> internal(c.cluster_count(), 0.0);
  std::vector<double> degree(c.cluster_count(), 0.0);
  for (const auto& e : g.edges()) {
    if (labels[e.u] == labels[e.v]) internal[labels[e.u]] += e.w;
  }
  for (int i = 0; i < g.node_count(); ++i) degree[labels[i]] += g.strengths()[i];
  double q = 0.0;
  const double two_m = 2.0 * m;
  for (int k = 0; k < c.cluster_count(); ++k) {
    const double frac = degree[k] / two_m;
    q += internal[k] / m - frac * frac;
  }
  return q;
}

double modularity_oracle(const Graph& g, const Clustering& c) {
  if (g.node_count() > 64)
    throw LimitError("modularity oracle capped at 64 nodes");
  const std::vector<int> labels = labels_for_graph(g, c);
  const double m = g.total_weight();
  if (m <= 0.0) throw InvalidInput("modularity undefined: graph has zero total weight");
  const int n = g.node_count();
  Matrix a = Matrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    a(e.u, e.v) += e.w;
    a(e.v, e.u) += e.w;
  }
  double q = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (labels[i] != labels[j]) continue;
      q += a(i, j) - g.strengths()[i] * g.strengths()[j] / (2.0 * m);
    }
  }
  return q / (2.0 * m);
}

Clustering cluster_greedy_modularity(const Graph& g) {
  if (g.edge_count() == 0)
    throw InvalidInput("cannot cluster a graph with no edges");
  const int n = g.node_count();
  const double m = g.total_weight();

  // Dense between-cluster weights; cluster ids are node indices initially and
  // the smaller id survives each merge.
  Matrix between = Matrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    between(e.u, e.v) += e.w;
    between(e.v, e.u) += e.w;
  }
  std::vector<double> degree = g.strengths();
  std::vector<double> internal(n, 0.0);
  std::vector<int> alive_ids(n);
  for (int i = 0; i < n; ++i) alive_ids[i] = i;
  std::vector<int> assign(n);
  for (int i = 0; i < n; ++i) assign[i] = i;
  std::vector<std::vector<int>> members(n);
  for (int i = 0; i < n; ++i) members[i] = {i};

  auto current_q = [&] {
    double q = 0.0;
    for (int c : alive_ids) {
      const double frac = degree[c] / (2.0 * m);
      q += internal[c] / m - frac * frac;
    }
    return q;
  };

  double best_q = current_q();
  std::vector<int> best_assign = assign;

  while (alive_ids.size() > 1) {
    double best_delta = -std::numeric_limits<double>::infinity();
    int bi = -1, bj = -1;
    for (std::size_t a = 0; a + 1 < alive_ids.size(); ++a) {
      const int i = alive_ids[a];
      for (std::size_t b = a + 1; b < alive_ids.size(); ++b) {
        const int j = alive_ids[b];
        if (between(i, j) <= 0.0) continue;  // only merge connected clusters
        const double delta =
            between(i, j) / m - degree[i] * degree[j] / (2.0 * m * m);
        if (delta > best_delta) {
          best_delta = delta;
          bi = i;
          bj = j;
        }
        // alive_ids is sorted, so the first maximum already carries the
        // smallest (min,max) pair; strict > keeps it.
      }
    }
    if (bi < 0) break;  // no connected pair left

    internal[bi] += internal[bj] + between(bi, bj);
    degree[bi] += degree[bj];
    for (int c : alive_ids) {
      if (c == bi || c == bj) continue;
      between(bi, c) += between(bj, c);
      between(c, bi) = between(bi, c);
    }
    between(bi, bj) = between(bj, bi) = 0.0;
    alive_ids.erase(std::find(alive_ids.begin(), alive_ids.end(), bj));
    for (int node : members[bj]) assign[node] = bi;
    members[bi].insert(members[bi].end(), members[bj].begin(), members[bj].end());
    members[bj].clear();

    const double q = current_q();
    if (q > best_q) {
      best_q = q;
      best_assign = assign;
    }
  }

  return Clustering(g.nodes(), best_assign);
}

}  // namespace mgc
