#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <set>

#include "mgc/errors.hpp"
#include "mgc/io.hpp"
#include "mgc/metrics.hpp"
#include "mgc/recovery.hpp"
#include "mgc/synth.hpp"

using namespace mgc;

TEST_CASE("planted generator is deterministic per seed (byte-identical file)") {
  PlantedSpec spec;
  spec.n = 60;
  spec.n_clusters = 4;
  spec.avg_degree = 8;
  spec.seed = 5;
  const auto [g1, c1] = generate_planted(spec);
  const auto [g2, c2] = generate_planted(spec);
  const auto p1 = std::filesystem::temp_directory_path() / "planted1.tsv";
  const auto p2 = std::filesystem::temp_directory_path() / "planted2.tsv";
  save_multigraph(g1, p1);
  save_multigraph(g2, p2);
  CHECK(file_digest(p1) == file_digest(p2));
  CHECK(c1.labels() == c2.labels());
}

TEST_CASE("mixing = 0 keeps every edge internal and every holding power positive") {
  PlantedSpec spec;
  spec.n = 80;
  spec.n_clusters = 4;
  spec.avg_degree = 10;
  spec.mixing = 0.0;
  spec.seed = 9;
  const auto [g, truth] = generate_planted(spec);
  for (const auto& [u, v] : g.endpoints())
    CHECK(truth.labels()[u] == truth.labels()[v]);
  Vector alpha(1);
  alpha << 1.0;
  const HoldingReport r = holding_report(g, alpha, truth, 1.0);
  // Nodes with no incident edges have H = 0; all others are strictly held.
  for (Eigen::Index i = 0; i < r.per_node.size(); ++i)
    CHECK(r.per_node[i] >= 0.0);
  CHECK(r.positive_fraction > 0.9);
}

TEST_CASE("edge counts stay within 10% of n*avg_degree/2 over 10 seeds") {
  PlantedSpec spec;
  spec.n = 500;
  spec.n_clusters = 10;
  spec.avg_degree = 20;
  spec.mixing = 0.5;
  const double expected = spec.n * spec.avg_degree / 2.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    spec.seed = seed;
    const auto [g, truth] = generate_planted(spec);
    CHECK(std::abs(g.edge_count() - expected) <= 0.10 * expected);
  }
}

TEST_CASE("noise types carry weights on the signal support") {
  PlantedSpec spec;
  spec.n = 40;
  spec.n_clusters = 4;
  spec.avg_degree = 6;
  spec.k_types = 2;
  spec.noise_types = 1;
  spec.seed = 3;
  const auto [g, truth] = generate_planted(spec);
  CHECK(g.type_count() == 2);
  CHECK(g.edge_types()[0] == "signal0");
  CHECK(g.edge_types()[1] == "noise0");
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK(g.weights()(e, 0) == 1.0);
    CHECK(g.weights()(e, 1) >= 0.0);
    CHECK(g.weights()(e, 1) < 1.0);
  }
}

TEST_CASE("planted generator rejects infeasible specs") {
  PlantedSpec spec;
  spec.n = 10;
  spec.avg_degree = 10;
  spec.n_clusters = 2;
  CHECK_THROWS_AS(generate_planted(spec), InvalidInput);
}

TEST_CASE("perturb identity hook returns the input byte-for-byte") {
  PlantedSpec spec;
  spec.n = 50;
  spec.n_clusters = 5;
  spec.avg_degree = 6;
  spec.seed = 17;
  const auto [g, truth] = generate_planted(spec);
  PerturbOptions identity;
  identity.sigma_scale = 0.0;
  identity.nu_lo = identity.nu_hi = 1.0;
  const MultiGraph p = perturb(g, 123, identity);
  const auto p1 = std::filesystem::temp_directory_path() / "perturb_in.tsv";
  const auto p2 = std::filesystem::temp_directory_path() / "perturb_out.tsv";
  save_multigraph(g, p1);
  save_multigraph(p, p2);
  CHECK(file_digest(p1) == file_digest(p2));
}

TEST_CASE("perturbed weights respect the range bound and support") {
  PlantedSpec spec;
  spec.n = 60;
  spec.n_clusters = 4;
  spec.avg_degree = 8;
  spec.seed = 21;
  const auto [g, truth] = generate_planted(spec);
  const MultiGraph p = perturb(g, 5);
  // w_a = 1 for the unit-weight signal type: w' <= nu_max * (w + 2).
  for (int e = 0; e < p.edge_count(); ++e) {
    CHECK(p.weights()(e, 0) >= 0.0);
    CHECK(p.weights()(e, 0) <= 3.0);
  }
  // No edges added: every perturbed edge exists in the original.
  CHECK(p.edge_count() <= g.edge_count());
  std::set<std::pair<int, int>> original(g.endpoints().begin(), g.endpoints().end());
  for (const auto& uv : p.endpoints()) CHECK(original.count(uv) == 1);
}

TEST_CASE("perturbed copies assemble k*copies types and keep union support") {
  PlantedSpec spec;
  spec.n = 30;
  spec.n_clusters = 3;
  spec.avg_degree = 6;
  spec.seed = 2;
  const auto [g, truth] = generate_planted(spec);
  const MultiGraph p = perturbed_copies(g, 10, 7);
  CHECK(p.type_count() == 10);
  CHECK(p.edge_types()[0] == "signal0#0");
  CHECK(p.edge_types()[9] == "signal0#9");
  CHECK(p.edge_count() <= g.edge_count());
}

TEST_CASE("perturbed single types hold fewer nodes than the clean signal") {
  PlantedSpec spec;
  spec.n = 200;
  spec.n_clusters = 8;
  spec.avg_degree = 20;
  spec.mixing = 0.6;
  spec.seed = 31;
  const auto [g, truth] = generate_planted(spec);
  Vector e0(1);
  e0 << 1.0;
  const double clean = holding_report(g, e0, truth, 1.0).positive_fraction;
  const MultiGraph p = perturbed_copies(g, 10, 13);
  double avg = 0.0;
  for (int t = 0; t < 10; ++t) {
    Vector et = Vector::Zero(10);
    et[t] = 1.0;
    avg += holding_report(p, et, truth, 1.0).positive_fraction;
  }
  avg /= 10.0;
  CHECK(avg < clean);
}

TEST_CASE("grid fixture has rows*cols*points nodes and product ground truth") {
  GridSpec spec;
  spec.seed = 3;
  const GridFixture fx = generate_grid(spec);
  CHECK(fx.graph.node_count() == 270);
  CHECK(fx.cells.cluster_count() == 9);
  CHECK(fx.row_factor.cluster_count() == 3);
  CHECK(fx.col_factor.cluster_count() == 3);
  // Cell truth is the product of the two factors.
  for (int i = 0; i < 270; ++i) {
    const int cell = fx.cells.labels()[i];
    CHECK(fx.row_factor.labels()[i] == cell / 3);
    CHECK(fx.col_factor.labels()[i] == cell % 3);
  }
  CHECK(fx.connected_support);
}

TEST_CASE("independent equal factors sit at exactly 2 ln(rows)") {
  GridSpec spec;
  spec.seed = 8;
  const GridFixture fx = generate_grid(spec);
  CHECK(vi_distance(fx.row_factor, fx.col_factor) ==
        doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-9));
  CHECK(setwise_information({fx.row_factor, fx.col_factor}) ==
        doctest::Approx(std::log(9.0)).epsilon(1e-9));
}

TEST_CASE("an axis-aligned projection clusters the columns") {
  GridSpec spec;
  spec.seed = 14;
  const auto points = grid_positions(spec);
  const MultiGraph g = grid_multigraph(points, {0.0}, spec.neighbor_radius);
  const Graph proj = extract_type(g, "proj0");
  const Clustering c = cluster_greedy_modularity(proj);
  const GridFixture fx = generate_grid(spec);
  CHECK(vi_distance(c, fx.col_factor) <= 0.2 * std::log(3.0));
}

TEST_CASE("tiny neighbor radius flags a disconnected support") {
  GridSpec spec;
  spec.seed = 4;
  spec.neighbor_radius = 0.05;
  const GridFixture fx = generate_grid(spec);
  CHECK_FALSE(fx.connected_support);
}

TEST_CASE("two-factor fixture has independent equal factors") {
  TwoFactorSpec spec;
  spec.seed = 6;
  const TwoFactorFixture fx = generate_two_factor(spec);
  CHECK(fx.graph.type_count() == 4);
  CHECK(vi_distance(fx.factor_a, fx.factor_b) ==
        doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-9));
}
