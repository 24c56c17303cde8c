#include "mgc/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgc/errors.hpp"
#include "mgc/metrics.hpp"

namespace mgc {

namespace {

std::vector<int> labels_for_multigraph(const MultiGraph& g, const Clustering& c) {
  if (g.node_count() != c.node_count())
    throw SemanticMismatch("clustering covers " + std::to_string(c.node_count()) +
                           " nodes, multigraph has " +
                           std::to_string(g.node_count()));
  if (g.nodes() == c.nodes()) return c.labels();
  std::vector<int> labels(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) labels[i] = c.label_of(g.nodes()[i]);
  return labels;
}

}  // namespace

double pull(const MultiGraph& g, const Vector& alpha, const Clustering& c,
            const std::string& node, int label) {
  const int v = g.node_index(node);
  if (v < 0) throw SemanticMismatch("unknown node: " + node);
  if (label < 0 || label >= c.cluster_count())
    throw SemanticMismatch("unknown cluster label: " + std::to_string(label));
  const std::vector<int> labels = labels_for_multigraph(g, c);
  const Vector composite = (g.weights() * alpha).cwiseMax(0.0);
  double sum = 0.0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints()[e];
    if (a == v && labels[b] == label) sum += composite[e];
    if (b == v && labels[a] == label) sum += composite[e];
  }
  return sum;
}

double holding_power(const MultiGraph& g, const Vector& alpha,
                     const Clustering& c, const std::string& node) {
  const int v = g.node_index(node);
  if (v < 0) throw SemanticMismatch("unknown node: " + node);
  const std::vector<int> labels = labels_for_multigraph(g, c);
  const Vector composite = (g.weights() * alpha).cwiseMax(0.0);
  std::vector<double> pulls(c.cluster_count(), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.endpoints()[e];
    if (a == v) pulls[labels[b]] += composite[e];
    if (b == v) pulls[labels[a]] += composite[e];
  }
  const int own = labels[v];
  double competing = 0.0;
  for (int k = 0; k < c.cluster_count(); ++k)
    if (k != own) competing = std::max(competing, pulls[k]);
  return pulls[own] - competing;
}

HoldingEvaluator::HoldingEvaluator(const MultiGraph& g, const Clustering& c)
    : weights_(g.weights()),
      labels_(labels_for_multigraph(g, c)),
      n_clusters_(c.cluster_count()) {
  const int n = g.node_count();
  std::vector<int> degree(n, 0);
  for (const auto& [u, v] : g.endpoints()) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  neighbor_.resize(offsets_[n]);
  edge_of_.resize(offsets_[n]);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.endpoints()[e];
    neighbor_[cursor[u]] = v;
    edge_of_[cursor[u]++] = e;
    neighbor_[cursor[v]] = u;
    edge_of_[cursor[v]++] = e;
  }
}

Vector HoldingEvaluator::powers(const Vector& alpha) const {
  const Vector composite = (weights_ * alpha).cwiseMax(0.0);
  const int n = static_cast<int>(offsets_.size()) - 1;
  Vector h(n);
  std::vector<double> acc(n_clusters_, 0.0);
  std::vector<int> stamp(n_clusters_, -1);
  std::vector<int> touched;
  touched.reserve(16);
  for (int v = 0; v < n; ++v) {
    touched.clear();
    for (int s = offsets_[v]; s < offsets_[v + 1]; ++s) {
      const int label = labels_[neighbor_[s]];
      if (stamp[label] != v) {
        stamp[label] = v;
        touched.push_back(label);
      }
      acc[label] += composite[edge_of_[s]];
    }
    const int own = labels_[v];
    double own_pull = 0.0, competing = 0.0;
    for (int label : touched) {
      if (label == own)
        own_pull = acc[label];
      else
        competing = std::max(competing, acc[label]);
      acc[label] = 0.0;
    }
    h[v] = own_pull - competing;
  }
  return h;
}

double HoldingEvaluator::objective(const Vector& alpha, double steepness) const {
  const Vector h = powers(alpha);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < h.size(); ++i)
    sum += std::atan(steepness * h[i]);
  return sum;
}

double HoldingEvaluator::positive_fraction(const Vector& alpha) const {
  const Vector h = powers(alpha);
  long positive = 0;
  for (Eigen::Index i = 0; i < h.size(); ++i)
    if (h[i] > 0.0) ++positive;
  return static_cast<double>(positive) / static_cast<double>(h.size());
}

HoldingReport HoldingEvaluator::report(const Vector& alpha,
                                       double steepness) const {
  if (steepness <= 0.0) throw InvalidInput("steepness must be > 0");
  HoldingReport r;
  r.per_node = powers(alpha);
  long positive = 0;
  double obj = 0.0;
  for (Eigen::Index i = 0; i < r.per_node.size(); ++i) {
    if (r.per_node[i] > 0.0) ++positive;
    obj += std::atan(steepness * r.per_node[i]);
  }
  r.positive_fraction =
      static_cast<double>(positive) / static_cast<double>(r.per_node.size());
  r.objective_value = obj;
  r.steepness = steepness;
  return r;
}

double arctan_objective(const MultiGraph& g, const Vector& alpha,
                        const Clustering& c, double steepness) {
  if (steepness <= 0.0) throw InvalidInput("steepness must be > 0");
  return HoldingEvaluator(g, c).objective(alpha, steepness);
}

HoldingReport holding_report(const MultiGraph& g, const Vector& alpha,
                             const Clustering& c, double steepness) {
  return HoldingEvaluator(g, c).report(alpha, steepness);
}

CutObjective cut_objective(const MultiGraph& g, const Vector& alpha,
                           const Clustering& c) {
  if (alpha.size() != g.type_count())
    throw SemanticMismatch("weight vector dimension does not match edge types");
  const std::vector<int> labels = labels_for_multigraph(g, c);
  Vector per_type = Vector::Zero(g.type_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.endpoints()[e];
    if (labels[u] != labels[v]) per_type += g.weights().row(e).transpose();
  }
  return {alpha.dot(per_type), std::move(per_type)};
}

Clustering forward_clustering(const MultiGraph& g, const Vector& alpha,
                              const Clusterer& clusterer, bool* zero_aggregate) {
  Graph aggregated = aggregate_linear(g, alpha, true);
  if (aggregated.edge_count() == 0) {
    if (zero_aggregate) *zero_aggregate = true;
    return Clustering::all_singletons(g.nodes());
  }
  if (zero_aggregate) *zero_aggregate = false;
  return clusterer(aggregated);
}

double inverse_objective(const MultiGraph& g, const Vector& alpha,
                         const Clustering& truth, const Clusterer& clusterer) {
  return vi_distance(clusterer(aggregate_linear(g, alpha, true)), truth);
}

RecoveryResult recover_weights(const MultiGraph& g, const Clustering& truth,
                               const SearchConfig& cfg) {
  cfg.validate();
  const int k = g.type_count();
  HoldingEvaluator evaluator(g, truth);
  const Objective f = [&](const Vector& a) {
    return evaluator.objective(a, cfg.steepness);
  };

  std::vector<Vector> starts;
  for (int t = 0; t < k; ++t) {
    Vector e = Vector::Zero(k);
    e[t] = 1.0;
    starts.push_back(std::move(e));
  }
  Rng rng(sub_seed(cfg.seed, 0x51));
  for (int s = 0; s < cfg.n_starts; ++s) starts.push_back(rng.unit_sphere(k));

  long used = 0;
  double init_value = -std::numeric_limits<double>::infinity();
  Vector init_point;
  for (const Vector& s : starts) {
    if (used >= cfg.max_evaluations) break;
    const double v = f(s);
    ++used;
    if (v > init_value) {
      init_value = v;
      init_point = s;
    }
  }
  if (init_point.size() == 0)
    throw InvalidInput("evaluation budget too small to initialize");

  Vector best = init_point;
  double best_value = init_value;
  bool improved = false;
  const long remaining = cfg.max_evaluations - used;
  if (remaining > 0) {
    SearchResult r =
        pattern_search(f, init_point, Domain::sphere(), cfg, remaining);
    used += r.evaluations;
    if (r.best_value > best_value) {
      best_value = r.best_value;
      best = r.best_point;
      improved = true;
    }
  }
  return {best, evaluator.report(best, cfg.steepness), improved, used};
}

std::vector<ParetoPoint> pareto_sweep(const MultiGraph& g,
                                      const Clustering& truth,
                                      const SearchConfig& cfg,
                                      const Vector* reference_alpha) {
  cfg.validate();
  HoldingEvaluator evaluator(g, truth);
  Rng rng(sub_seed(cfg.seed, 0x52));
  std::vector<Vector> alphas;
  for (int s = 0; s < cfg.n_samples; ++s)
    alphas.push_back(rng.unit_sphere(g.type_count()));
  alphas.push_back(recover_weights(g, truth, cfg).alpha);

  std::vector<ParetoPoint> points;
  std::vector<double> raw_q;
  for (const Vector& a : alphas) {
    const Graph aggregated = aggregate_linear(g, a, true);
    if (aggregated.total_weight() <= 0.0) continue;  // modularity undefined
    points.push_back({a, evaluator.positive_fraction(a), 0.0});
    raw_q.push_back(modularity(aggregated, truth));
  }
  if (points.empty()) return points;

  double reference_q = 0.0;
  if (reference_alpha) {
    const Graph ref = aggregate_linear(g, *reference_alpha, true);
    if (ref.total_weight() > 0.0) reference_q = modularity(ref, truth);
  }
  if (reference_q == 0.0)
    reference_q = *std::max_element(raw_q.begin(), raw_q.end());
  for (std::size_t i = 0; i < points.size(); ++i)
    points[i].normalized_modularity =
        reference_q != 0.0 ? raw_q[i] / reference_q : raw_q[i];

  return pareto_frontier(points);
}

std::vector<ParetoPoint> pareto_frontier(const std::vector<ParetoPoint>& points) {
  std::vector<ParetoPoint> frontier;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool ge = points[j].positive_fraction >= points[i].positive_fraction &&
                      points[j].normalized_modularity >= points[i].normalized_modularity;
      const bool gt = points[j].positive_fraction > points[i].positive_fraction ||
                      points[j].normalized_modularity > points[i].normalized_modularity;
      dominated = ge && gt;
    }
    if (!dominated) frontier.push_back(points[i]);
  }
  std::sort(frontier.begin(), frontier.end(),
            [](const ParetoPoint& a, const ParetoPoint& b) {
              return a.positive_fraction < b.positive_fraction;
            });
  return frontier;
}

std::vector<CorrelationPoint> correlation_sweep(
    const MultiGraph& g, const Clustering& truth, const Clusterer& clusterer,
    const std::vector<double>& steepness_grid, const SearchConfig& cfg) {
  cfg.validate();
  if (steepness_grid.empty()) throw InvalidInput("empty steepness grid");
  HoldingEvaluator evaluator(g, truth);
  Rng rng(sub_seed(cfg.seed, 0x53));
  std::vector<Vector> alphas;
  for (int s = 0; s < cfg.n_samples; ++s)
    alphas.push_back(rng.unit_sphere(g.type_count()));

  // Forward clusterings are steepness-independent; compute once per sample.
  std::vector<double> negated_vi;
  negated_vi.reserve(alphas.size());
  for (const Vector& a : alphas)
    negated_vi.push_back(-vi_distance(forward_clustering(g, a, clusterer), truth));

  std::vector<CorrelationPoint> out;
  for (double steepness : steepness_grid) {
    if (steepness <= 0.0) throw InvalidInput("steepness must be > 0");
    std::vector<double> objective_values;
    objective_values.reserve(alphas.size());
    for (const Vector& a : alphas)
      objective_values.push_back(evaluator.objective(a, steepness));
    out.push_back({steepness, pearson_correlation(objective_values, negated_vi)});
  }
  return out;
}

}  // namespace mgc
