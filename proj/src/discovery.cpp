#include "mgc/discovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgc/errors.hpp"
#include "mgc/metrics.hpp"
#include "mgc/recovery.hpp"

namespace mgc {

namespace {

constexpr double kLowNoveltyFraction = 0.01;  // of ln n

}

std::pair<double, DiscoveryReport> unexpected_objective(
    const MultiGraph& g, const Vector& alpha,
    const std::vector<Clustering>& given, const Clusterer& clusterer,
    double lambda) {
  if (given.empty()) throw InvalidInput("discovery needs at least one given clustering");
  if (lambda < 0.0) throw InvalidInput("lambda must be >= 0");
  const double log_n = std::log(static_cast<double>(g.node_count()));

  DiscoveryReport report;
  report.alpha = alpha;
  const Graph aggregated = aggregate_linear(g, alpha, true);
  if (aggregated.total_weight() <= 0.0) {
    report.clustering = Clustering::all_singletons(g.nodes());
    report.empty_aggregate = true;
    report.scalarized = -std::numeric_limits<double>::infinity();
    for (const Clustering& c : given)
      report.vi_to_given.push_back(vi_distance(report.clustering, c));
    return {report.scalarized, report};
  }

  report.clustering = clusterer(aggregated);
  report.modularity = modularity(aggregated, report.clustering);
  double min_vi = std::numeric_limits<double>::infinity();
  for (const Clustering& c : given) {
    const double d = vi_distance(report.clustering, c);
    report.vi_to_given.push_back(d);
    min_vi = std::min(min_vi, d);
  }
  report.low_novelty = min_vi <= kLowNoveltyFraction * log_n;
  report.scalarized = report.modularity + lambda * min_vi / log_n;
  return {report.scalarized, report};
}

DiscoveryReport find_unexpected(const MultiGraph& g,
                                const std::vector<Clustering>& given,
                                const SearchConfig& cfg,
                                const Clusterer& clusterer) {
  cfg.validate();
  const Objective f = [&](const Vector& a) {
    return unexpected_objective(g, a, given, clusterer, cfg.lambda).first;
  };
  const SearchResult r =
      multistart(f, g.type_count(), Domain::box(-1.0, 1.0), cfg);
  return unexpected_objective(g, r.best_point, given, clusterer, cfg.lambda)
      .second;
}

std::vector<PairTableRow> enumerate_pairs(const MultiGraph& g,
                                          const Clustering& reference,
                                          const Clusterer& clusterer,
                                          bool include_singletons) {
  const int k = g.type_count();
  std::vector<PairTableRow> rows;

  auto score = [&](const Graph& graph, const std::string& label) {
    PairTableRow row;
    row.label = label;
    if (graph.total_weight() <= 0.0) {
      row.modularity = std::nullopt;
      row.vi_to_reference =
          vi_distance(Clustering::all_singletons(g.nodes()), reference);
    } else {
      const Clustering c = clusterer(graph);
      row.modularity = modularity(graph, c);
      row.vi_to_reference = vi_distance(c, reference);
    }
    rows.push_back(std::move(row));
  };

  if (include_singletons) {
    for (int t = 0; t < k; ++t)
      score(extract_type(g, g.edge_types()[t]), g.edge_types()[t]);
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      score(aggregate_product(g, g.edge_types()[a], g.edge_types()[b]),
            g.edge_types()[a] + "*" + g.edge_types()[b]);

  std::stable_sort(rows.begin(), rows.end(),
                   [](const PairTableRow& x, const PairTableRow& y) {
                     return x.vi_to_reference > y.vi_to_reference;
                   });
  return rows;
}

std::vector<DistantPick> select_distant_set(
    const std::vector<Clustering>& candidates, const Clustering& reference,
    int m) {
  if (m < 0 || m > static_cast<int>(candidates.size()))
    throw InvalidInput("cannot select " + std::to_string(m) + " of " +
                       std::to_string(candidates.size()) + " candidates");
  // Distance of every candidate to the reference and to each other.
  const int n = static_cast<int>(candidates.size());
  std::vector<double> min_d(n);
  for (int i = 0; i < n; ++i) min_d[i] = vi_distance(candidates[i], reference);

  std::vector<DistantPick> picks;
  std::vector<bool> chosen(n, false);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    double best_d = -1.0;
    for (int i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      if (min_d[i] > best_d) {
        best_d = min_d[i];
        best = i;
      }
    }
    chosen[best] = true;
    picks.push_back({best, best_d});
    for (int i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      min_d[i] = std::min(min_d[i], vi_distance(candidates[i], candidates[best]));
    }
  }
  return picks;
}

}  // namespace mgc
