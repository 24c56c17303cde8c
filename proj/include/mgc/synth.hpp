#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mgc/community.hpp"
#include "mgc/multigraph.hpp"

namespace mgc {

// Equal-size planted partition with k_types edge types: the signal types
// carry the community structure with unit weights, the noise_types trailing
// types carry uniform random weights on the same edge support.
struct PlantedSpec {
  int n = 500;
  int n_clusters = 14;
  double avg_degree = 30.0;
  // Fraction of a node's expected edge weight leaving its cluster.
  double mixing = 0.7;
  int k_types = 1;
  int noise_types = 0;
  std::uint64_t seed = 0;
};

std::pair<MultiGraph, Clustering> generate_planted(const PlantedSpec& spec);

// Noise model w <- nu * (w + sigma), sigma ~ U(-sigma_scale*w_a,
// +sigma_scale*w_a), nu ~ U(nu_lo, nu_hi), w_a the per-type average stored
// weight. Results clamp at 0; edges that clamp to zero in every type are
// dropped. The defaults reproduce the protocol; sigma_scale=0, nu_lo=nu_hi=1
// is the identity hook.
struct PerturbOptions {
  double sigma_scale = 2.0;
  double nu_lo = 0.0;
  double nu_hi = 1.0;
};

MultiGraph perturb(const MultiGraph& g, std::uint64_t seed,
                   const PerturbOptions& opts = {});

// `copies` independently perturbed copies of every edge type, assembled into
// one multigraph (k_types * copies types named "<type>#<i>").
MultiGraph perturbed_copies(const MultiGraph& g, int copies, std::uint64_t seed,
                            const PerturbOptions& opts = {});

// rows x cols cells of points on the plane, one edge type per random 1-d
// projection; weight = 1/(projected distance + epsilon) for pairs within
// neighbor_radius in the plane.
struct GridSpec {
  int rows = 3;
  int cols = 3;
  int points_per_cell = 30;
  int n_projections = 16;
  double neighbor_radius = 2.5;
  std::uint64_t seed = 0;
  // Half-width of the uniform scatter of points around each cell center
  // (cell pitch is 1).
  double scatter = 0.3;
  // Saturation scale of the inverse-distance weight. Kept at the within-cell
  // spread: a smaller floor makes the weights scale-free and modularity then
  // resolves arbitrary sub-bands of a projection instead of its clusters.
  double epsilon = 0.1;
};

struct GridFixture {
  MultiGraph graph;
  Clustering cells;       // ground truth: rows x cols clusters
  Clustering row_factor;  // collapses columns
  Clustering col_factor;  // collapses rows
  bool connected_support = true;
};

GridFixture generate_grid(const GridSpec& spec);

// Building blocks of generate_grid, exposed so tests can pin projection
// directions (e.g. an axis-aligned projection).
std::vector<std::array<double, 2>> grid_positions(const GridSpec& spec);
MultiGraph grid_multigraph(const std::vector<std::array<double, 2>>& points,
                           const std::vector<double>& angles, double radius,
                           double epsilon = 0.1, bool* connected = nullptr);

// Two independent 3-way latent factors on the same node set with
// views_per_factor noisy planted views of each ("a0","a1",...,"b0","b1",...).
// Within-group pairs get unit-weight edges with probability p_in, others with
// p_out, independently per view.
struct TwoFactorSpec {
  int n = 180;
  int groups = 3;
  double p_in = 0.6;
  double p_out = 0.1;
  int views_per_factor = 2;
  std::uint64_t seed = 0;
};

struct TwoFactorFixture {
  MultiGraph graph;
  Clustering factor_a;
  Clustering factor_b;
};

TwoFactorFixture generate_two_factor(const TwoFactorSpec& spec);

}  // namespace mgc
