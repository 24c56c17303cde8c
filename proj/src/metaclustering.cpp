#include "mgc/metaclustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "mgc/errors.hpp"
#include "mgc/recovery.hpp"

namespace mgc {

namespace {

std::vector<std::string> index_names(const std::string& prefix, int n) {
  int width = 1;
  for (int v = n - 1; v >= 10; v /= 10) ++width;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    names.push_back(prefix + std::string(width - digits.size(), '0') + digits);
  }
  return names;
}

}  // namespace

std::vector<Vector> sample_alphas(int k, int n, std::uint64_t seed) {
  if (k < 1 || n < 1) throw InvalidInput("sample_alphas needs k >= 1 and n >= 1");
  Rng rng(sub_seed(seed, 0x61));
  std::vector<Vector> alphas;
  alphas.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) alphas.push_back(rng.unit_sphere(k));
  return alphas;
}

Ensemble sample_clustering_space(const MultiGraph& g,
                                 const std::vector<Vector>& alphas,
                                 const Clusterer& clusterer) {
  if (alphas.empty()) throw InvalidInput("no weight vectors to sample");
  Ensemble e;
  e.node_universe = g.nodes();
  for (const Vector& a : alphas) {
    bool zero = false;
    Clustering c = forward_clustering(g, a, clusterer, &zero);
    e.alphas.push_back(a);
    e.clusterings.push_back(std::move(c));
    e.warnings.push_back(zero ? "zero-weight aggregate; all-singletons" : "");
  }
  return e;
}

Graph build_meta_graph(const Ensemble& e) {
  if (e.size() < 2) throw InvalidInput("meta graph needs >= 2 ensemble entries");
  const long n_nodes = static_cast<long>(e.node_universe.size());
  if (n_nodes < 2) throw InvalidInput("meta graph needs a universe of >= 2 nodes");
  const double delta = 0.01 * std::log(static_cast<double>(n_nodes));
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(e.size()) * (e.size() - 1) / 2);
  for (int i = 0; i < e.size(); ++i)
    for (int j = i + 1; j < e.size(); ++j)
      edges.push_back(
          {i, j, 1.0 / (vi_distance(e.clusterings[i], e.clusterings[j]) + delta)});
  return Graph(index_names("s", e.size()), std::move(edges));
}

Clustering metacluster(const Ensemble& e, const Clusterer& clusterer) {
  return clusterer(build_meta_graph(e));
}

Clustering cspa_consensus(const std::vector<Clustering>& cs,
                          const Clusterer& clusterer) {
  if (cs.empty()) throw InvalidInput("consensus of an empty list");
  const Clustering& base = cs.front();
  const int n = base.node_count();
  std::map<std::pair<int, int>, double> cooccur;
  for (const Clustering& c : cs) {
    const std::vector<int> labels = base.aligned_labels(c);
    std::vector<std::vector<int>> groups(c.cluster_count());
    for (int i = 0; i < n; ++i) groups[labels[i]].push_back(i);
    for (const auto& group : groups) {
      for (std::size_t a = 0; a + 1 < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b)
          cooccur[{group[a], group[b]}] += 1.0;
    }
  }
  if (cooccur.empty()) return Clustering::all_singletons(base.nodes());
  std::vector<Graph::Edge> edges;
  edges.reserve(cooccur.size());
  for (const auto& [pair, w] : cooccur) edges.push_back({pair.first, pair.second, w});
  return clusterer(Graph(base.nodes(), std::move(edges)));
}

Ordering order_representatives(const std::vector<Clustering>& cs,
                               OrderMode mode) {
  if (cs.empty()) throw InvalidInput("nothing to order");
  const int n = static_cast<int>(cs.size());
  Ordering result;
  if (n == 1) {
    result.order = {0};
    result.scores = {entropy(cs[0])};
    return result;
  }

  if (mode == OrderMode::exact) {
    if (n > 8)
      throw LimitError("exact ordering capped at 8 clusterings; use greedy mode");
    std::vector<bool> chosen(n, false);
    std::vector<Clustering> prefix;
    for (int step = 0; step < n; ++step) {
      int best = -1;
      double best_score = -std::numeric_limits<double>::infinity();
      for (int c = 0; c < n; ++c) {
        if (chosen[c]) continue;
        std::vector<Clustering> trial = prefix;
        trial.push_back(cs[c]);
        const double score = setwise_information(trial);
        if (score > best_score) {
          best_score = score;
          best = c;
        }
      }
      chosen[best] = true;
      prefix.push_back(cs[best]);
      result.order.push_back(best);
      result.scores.push_back(best_score);
    }
    return result;
  }

  // Greedy: seed with the farthest pair, then max-min distance.
  const Matrix d = vi_matrix(cs);
  int si = 0, sj = 1;
  double best_d = -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d(i, j) > best_d) {
        best_d = d(i, j);
        si = i;
        sj = j;
      }
    }
  }
  std::vector<bool> chosen(n, false);
  chosen[si] = chosen[sj] = true;
  result.order = {si, sj};
  while (static_cast<int>(result.order.size()) < n) {
    int best = -1;
    double best_min = -1.0;
    for (int c = 0; c < n; ++c) {
      if (chosen[c]) continue;
      double min_d = std::numeric_limits<double>::infinity();
      for (int s : result.order) min_d = std::min(min_d, d(c, s));
      if (min_d > best_min) {
        best_min = min_d;
        best = c;
      }
    }
    chosen[best] = true;
    result.order.push_back(best);
  }
  std::vector<Clustering> prefix;
  for (int idx : result.order) {
    prefix.push_back(cs[idx]);
    result.scores.push_back(setwise_information(prefix));
  }
  return result;
}

std::vector<int> seriate(const Ensemble& e) {
  if (e.size() < 2) throw InvalidInput("seriation needs >= 2 ensemble entries");
  const int n = e.size();
  Matrix d = vi_matrix(e.clusterings);
  std::vector<int> active;
  std::vector<int> size(n, 1);
  std::vector<std::vector<int>> leaves(n);
  for (int i = 0; i < n; ++i) {
    active.push_back(i);
    leaves[i] = {i};
  }
  while (active.size() > 1) {
    int bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a + 1 < active.size(); ++a) {
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        const int i = active[a], j = active[b];
        if (d(i, j) < best) {
          best = d(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    // Average linkage update into the smaller id.
    for (int c : active) {
      if (c == bi || c == bj) continue;
      d(bi, c) = (size[bi] * d(bi, c) + size[bj] * d(bj, c)) /
                 static_cast<double>(size[bi] + size[bj]);
      d(c, bi) = d(bi, c);
    }
    size[bi] += size[bj];
    leaves[bi].insert(leaves[bi].end(), leaves[bj].begin(), leaves[bj].end());
    active.erase(std::find(active.begin(), active.end(), bj));
  }
  return leaves[active.front()];
}

std::vector<std::vector<std::string>> invariant_groups(const Ensemble& e) {
  if (e.size() == 0) throw InvalidInput("invariant groups of an empty ensemble");
  const int n = static_cast<int>(e.node_universe.size());
  // Product partition by iterative refinement over universe order.
  std::vector<int> cell(n, 0);
  long n_cells = 1;
  for (const Clustering& c : e.clusterings) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = c.label_of(e.node_universe[i]);
    std::unordered_map<long, int> remap;
    remap.reserve(static_cast<std::size_t>(n));
    int next = 0;
    for (int i = 0; i < n; ++i) {
      const long key = static_cast<long>(cell[i]) * c.cluster_count() + labels[i];
      auto [it, inserted] = remap.emplace(key, next);
      if (inserted) ++next;
      cell[i] = it->second;
    }
    n_cells = next;
  }
  std::vector<std::vector<int>> members(n_cells);
  for (int i = 0; i < n; ++i) members[cell[i]].push_back(i);
  std::vector<std::vector<std::string>> groups;
  for (const auto& m : members) {
    if (m.size() < 2) continue;
    std::vector<std::string> names;
    names.reserve(m.size());
    for (int i : m) names.push_back(e.node_universe[i]);
    groups.push_back(std::move(names));
  }
  return groups;
}

MetaClusteringReport metacluster_report(const Ensemble& e,
                                        const Clusterer& clusterer,
                                        double drop_fraction) {
  MetaClusteringReport report;
  report.meta_partition = metacluster(e, clusterer);
  report.seriation = seriate(e);

  const int threshold = static_cast<int>(
      std::ceil(drop_fraction * static_cast<double>(e.size())));
  std::vector<std::pair<int, int>> kept;  // (size, label), largest first
  for (int label = 0; label < report.meta_partition.cluster_count(); ++label) {
    const int size =
        static_cast<int>(report.meta_partition.clusters()[label].size());
    if (size >= threshold && size >= 1)
      kept.emplace_back(size, label);
    else
      report.dropped_meta_labels.push_back(label);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  std::vector<Clustering> reps;
  std::vector<int> sizes;
  for (const auto& [size, label] : kept) {
    report.kept_meta_labels.push_back(label);
    std::vector<Clustering> members;
    for (int idx : report.meta_partition.clusters()[label])
      members.push_back(e.clusterings[idx]);
    reps.push_back(cspa_consensus(members, clusterer));
    sizes.push_back(size);
  }

  if (!reps.empty()) {
    const Ordering ordering = order_representatives(
        reps, reps.size() <= 8 ? OrderMode::exact : OrderMode::greedy);
    for (std::size_t i = 0; i < ordering.order.size(); ++i) {
      report.representatives.push_back(reps[ordering.order[i]]);
      report.representative_sizes.push_back(sizes[ordering.order[i]]);
    }
    report.ordering_scores = ordering.scores;
  }
  return report;
}

}  // namespace mgc
