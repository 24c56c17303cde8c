#include "mgc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mgc/errors.hpp"
#include "mgc/types.hpp"

namespace mgc {

namespace {

std::vector<std::string> numbered_names(const std::string& prefix, int n) {
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

std::pair<MultiGraph, Clustering> generate_planted(const PlantedSpec& spec) {
  if (spec.n < 2) throw InvalidInput("planted graph needs n >= 2");
  if (spec.n_clusters < 1 || spec.n_clusters > spec.n)
    throw InvalidInput("n_clusters must lie in [1, n]");
  if (spec.avg_degree >= spec.n)
    throw InvalidInput("infeasible degree: avg_degree must be < n");
  if (spec.mixing < 0.0 || spec.mixing >= 1.0)
    throw InvalidInput("mixing must lie in [0,1)");
  if (spec.k_types < 1) throw InvalidInput("k_types must be >= 1");
  if (spec.noise_types < 0 || spec.noise_types >= spec.k_types)
    throw InvalidInput("noise_types must leave at least one signal type");

  const int n = spec.n;
  const int k = spec.k_types;
  const int signal_types = k - spec.noise_types;

  // Contiguous equal-size blocks (first n % n_clusters blocks get one extra).
  std::vector<int> membership(n);
  {
    const int base = n / spec.n_clusters;
    const int extra = n % spec.n_clusters;
    int node = 0;
    for (int c = 0; c < spec.n_clusters; ++c) {
      const int size = base + (c < extra ? 1 : 0);
      for (int s = 0; s < size; ++s) membership[node++] = c;
    }
  }

  const double mean_size = static_cast<double>(n) / spec.n_clusters;
  const double p_in =
      mean_size > 1.0
          ? std::min(1.0, (1.0 - spec.mixing) * spec.avg_degree / (mean_size - 1.0))
          : 0.0;
  const double p_out =
      std::min(1.0, spec.mixing * spec.avg_degree / (n - mean_size));

  Rng rng(sub_seed(spec.seed, 0x11));
  std::vector<std::pair<int, int>> endpoints;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double p = membership[i] == membership[j] ? p_in : p_out;
      if (rng.uniform() < p) endpoints.emplace_back(i, j);
    }
  }

  Matrix weights(endpoints.size(), k);
  weights.leftCols(signal_types).setOnes();
  Rng noise_rng(sub_seed(spec.seed, 0x12));
  for (Eigen::Index e = 0; e < weights.rows(); ++e)
    for (int t = signal_types; t < k; ++t)
      weights(e, t) = noise_rng.uniform();

  std::vector<std::string> type_names;
  for (int t = 0; t < signal_types; ++t)
    type_names.push_back("signal" + std::to_string(t));
  for (int t = 0; t < spec.noise_types; ++t)
    type_names.push_back("noise" + std::to_string(t));

  std::vector<std::string> nodes = numbered_names("v", n);
  MultiGraph g(nodes, std::move(type_names), std::move(endpoints),
               std::move(weights));
  return {std::move(g), Clustering(std::move(nodes), membership)};
}

namespace {

Matrix perturb_weights(const MultiGraph& g, Rng& rng,
                       const PerturbOptions& opts) {
  const Matrix& w = g.weights();
  Vector type_mean = w.colwise().mean();
  Matrix out(w.rows(), w.cols());
  for (Eigen::Index e = 0; e < w.rows(); ++e) {
    for (Eigen::Index t = 0; t < w.cols(); ++t) {
      const double span = opts.sigma_scale * type_mean[t];
      const double sigma = rng.uniform(-span, span);
      const double nu = rng.uniform(opts.nu_lo, opts.nu_hi);
      out(e, t) = std::max(0.0, nu * (w(e, t) + sigma));
    }
  }
  return out;
}

MultiGraph drop_zero_rows(const MultiGraph& g, std::vector<std::string> types,
                          const Matrix& weights) {
  std::vector<std::pair<int, int>> endpoints;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index e = 0; e < weights.rows(); ++e) {
    if (weights.row(e).maxCoeff() > 0.0) {
      keep.push_back(e);
      endpoints.push_back(g.endpoints()[static_cast<std::size_t>(e)]);
    }
  }
  Matrix pruned(keep.size(), weights.cols());
  for (std::size_t r = 0; r < keep.size(); ++r)
    pruned.row(static_cast<Eigen::Index>(r)) = weights.row(keep[r]);
  return MultiGraph(g.nodes(), std::move(types), std::move(endpoints),
                    std::move(pruned));
}

}  // namespace

MultiGraph perturb(const MultiGraph& g, std::uint64_t seed,
                   const PerturbOptions& opts) {
  if (g.edge_count() == 0) throw InvalidInput("cannot perturb an empty multigraph");
  Rng rng(sub_seed(seed, 0x21));
  return drop_zero_rows(g, g.edge_types(), perturb_weights(g, rng, opts));
}

MultiGraph perturbed_copies(const MultiGraph& g, int copies, std::uint64_t seed,
                            const PerturbOptions& opts) {
  if (copies < 1) throw InvalidInput("perturbed_copies needs copies >= 1");
  if (g.edge_count() == 0) throw InvalidInput("cannot perturb an empty multigraph");
  const int k = g.type_count();
  Matrix all(g.edge_count(), static_cast<Eigen::Index>(k) * copies);
  std::vector<std::string> types;
  for (int c = 0; c < copies; ++c) {
    Rng rng(sub_seed(seed, 0x22 + static_cast<std::uint64_t>(c)));
    all.middleCols(static_cast<Eigen::Index>(c) * k, k) =
        perturb_weights(g, rng, opts);
    for (const auto& t : g.edge_types())
      types.push_back(t + "#" + std::to_string(c));
  }
  return drop_zero_rows(g, std::move(types), all);
}

std::vector<std::array<double, 2>> grid_positions(const GridSpec& spec) {
  Rng rng(sub_seed(spec.seed, 0x31));
  std::vector<std::array<double, 2>> points;
  points.reserve(static_cast<std::size_t>(spec.rows) * spec.cols *
                 spec.points_per_cell);
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      for (int p = 0; p < spec.points_per_cell; ++p) {
        const double x = c + 0.5 + rng.uniform(-spec.scatter, spec.scatter);
        const double y = r + 0.5 + rng.uniform(-spec.scatter, spec.scatter);
        points.push_back({x, y});
      }
    }
  }
  return points;
}

MultiGraph grid_multigraph(const std::vector<std::array<double, 2>>& points,
                           const std::vector<double>& angles, double radius,
                           double epsilon, bool* connected) {
  const int n = static_cast<int>(points.size());
  const int k = static_cast<int>(angles.size());
  if (n < 2 || k < 1) throw InvalidInput("grid needs >= 2 points and >= 1 projection");
  if (epsilon <= 0.0) throw InvalidInput("epsilon must be > 0");
  std::vector<std::pair<int, int>> endpoints;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = points[i][0] - points[j][0];
      const double dy = points[i][1] - points[j][1];
      if (std::sqrt(dx * dx + dy * dy) <= radius) endpoints.emplace_back(i, j);
    }
  }
  Matrix weights(endpoints.size(), k);
  for (int t = 0; t < k; ++t) {
    const double cx = std::cos(angles[t]);
    const double cy = std::sin(angles[t]);
    for (std::size_t e = 0; e < endpoints.size(); ++e) {
      const auto [i, j] = endpoints[e];
      const double d = std::abs((points[i][0] - points[j][0]) * cx +
                                (points[i][1] - points[j][1]) * cy);
      weights(static_cast<Eigen::Index>(e), t) = 1.0 / (d + epsilon);
    }
  }
  if (connected) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : endpoints) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    *connected = reached == n;
  }
  return MultiGraph(numbered_names("p", n), numbered_names("proj", k),
                    std::move(endpoints), std::move(weights));
}

GridFixture generate_grid(const GridSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1 || spec.points_per_cell < 1)
    throw InvalidInput("grid spec must be positive");
  if (spec.n_projections < 1) throw InvalidInput("need at least one projection");
  const auto points = grid_positions(spec);
  Rng rng(sub_seed(spec.seed, 0x32));
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(spec.n_projections));
  const double pi = std::acos(-1.0);
  for (int t = 0; t < spec.n_projections; ++t)
    angles.push_back(rng.uniform(0.0, pi));
  bool connected = true;
  MultiGraph graph = grid_multigraph(points, angles, spec.neighbor_radius,
                                     spec.epsilon, &connected);

  const int n = static_cast<int>(points.size());
  std::vector<int> cell(n), row(n), col(n);
  for (int i = 0; i < n; ++i) {
    const int c = i / spec.points_per_cell;  // cell index, row-major
    cell[i] = c;
    row[i] = c / spec.cols;
    col[i] = c % spec.cols;
  }
  GridFixture fx{std::move(graph), Clustering(numbered_names("p", n), cell),
                 Clustering(numbered_names("p", n), row),
                 Clustering(numbered_names("p", n), col), connected};
  return fx;
}

TwoFactorFixture generate_two_factor(const TwoFactorSpec& spec) {
  if (spec.n < spec.groups * spec.groups)
    throw InvalidInput("two-factor fixture needs n >= groups^2");
  if (spec.n % (spec.groups * spec.groups) != 0)
    throw InvalidInput("n must be divisible by groups^2 for equal cells");
  if (spec.views_per_factor < 1) throw InvalidInput("views_per_factor must be >= 1");
  const int n = spec.n;
  const int g = spec.groups;
  const int block = n / g;

  // factor A = contiguous blocks, factor B = index mod groups: independent
  // uniform factors with equal cell sizes.
  std::vector<int> fa(n), fb(n);
  for (int i = 0; i < n; ++i) {
    fa[i] = i / block;
    fb[i] = i % g;
  }

  const int k = 2 * spec.views_per_factor;
  std::vector<std::string> type_names;
  for (int v = 0; v < spec.views_per_factor; ++v)
    type_names.push_back("a" + std::to_string(v));
  for (int v = 0; v < spec.views_per_factor; ++v)
    type_names.push_back("b" + std::to_string(v));

  Rng rng(sub_seed(spec.seed, 0x41));
  std::vector<std::pair<int, int>> endpoints;
  std::vector<Vector> weight_rows;
  Vector w(k);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool any = false;
      for (int t = 0; t < k; ++t) {
        const bool a_side = t < spec.views_per_factor;
        const bool together = a_side ? fa[i] == fa[j] : fb[i] == fb[j];
        const double p = together ? spec.p_in : spec.p_out;
        w[t] = rng.uniform() < p ? 1.0 : 0.0;
        any |= w[t] > 0.0;
      }
      if (any) {
        endpoints.emplace_back(i, j);
        weight_rows.push_back(w);
      }
    }
  }
  Matrix weights(weight_rows.size(), k);
  for (std::size_t e = 0; e < weight_rows.size(); ++e)
    weights.row(static_cast<Eigen::Index>(e)) = weight_rows[e].transpose();

  std::vector<std::string> nodes = numbered_names("v", n);
  MultiGraph mg(nodes, std::move(type_names), std::move(endpoints),
                std::move(weights));
  return {std::move(mg), Clustering(nodes, fa), Clustering(std::move(nodes), fb)};
}

}  // namespace mgc
