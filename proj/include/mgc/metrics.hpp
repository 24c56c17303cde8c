#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "mgc/community.hpp"
#include "mgc/types.hpp"

namespace mgc {

// Co-occurrence counts |C_a^k  intersect  C_b^l| between two clusterings of
// the same node set. Only nonzero cells are stored, sorted by (row, col).
struct ContingencyTable {
  std::vector<std::tuple<int, int, long>> cells;
  std::vector<long> row_sums;
  std::vector<long> col_sums;
  long n = 0;

  static ContingencyTable build(const Clustering& a, const Clustering& b);
  Matrix dense() const;
};

// Natural-log entropy of the cluster-size distribution; 0 <= H <= ln n.
double entropy(const Clustering& c);

// Mutual information I(a,b) >= 0, I <= min(H(a), H(b)).
double mutual_information(const Clustering& a, const Clustering& b);

// Variation of information d = H(a) + H(b) - 2 I(a,b). A metric: zero iff the
// clusterings agree up to relabeling, bounded by ln n. Tiny negative roundoff
// is clamped to zero and vi_distance(a,b) == vi_distance(b,a) bit-for-bit.
double vi_distance(const Clustering& a, const Clustering& b);

// Joint entropy of the product partition of all clusterings (cells are the
// nonempty intersections across every input). Nondecreasing as clusterings
// are added; <= ln n. Throws LimitError past 10^6 nonempty cells.
double setwise_information(const std::vector<Clustering>& cs);

// Symmetric matrix of pairwise VI distances, zero diagonal.
Matrix vi_matrix(const std::vector<Clustering>& cs);

// Pearson correlation; std::nullopt when either sequence is constant.
std::optional<double> pearson_correlation(const std::vector<double>& x,
                                          const std::vector<double>& y);

}  // namespace mgc
