#include "mgc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "mgc/errors.hpp"

namespace mgc {

namespace {

constexpr long kSetwiseCellCap = 1000000;

double entropy_of_counts(const std::vector<long>& counts, long n) {
  double h = 0.0;
  for (long c : counts) {
    if (c <= 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(n);
    h -= p * std::log(p);
  }
  return h;
}

// I over label vectors; iteration order is fixed by sorted cell keys so equal
// inputs give bit-identical sums.
double mutual_information_labels(const std::vector<int>& la,
                                 const std::vector<int>& lb, int ka, int kb) {
  const long n = static_cast<long>(la.size());
  std::unordered_map<long, long> counts;
  counts.reserve(la.size());
  std::vector<long> row(ka, 0), col(kb, 0);
  for (std::size_t i = 0; i < la.size(); ++i) {
    counts[static_cast<long>(la[i]) * kb + lb[i]] += 1;
    row[la[i]] += 1;
    col[lb[i]] += 1;
  }
  std::vector<std::pair<long, long>> cells(counts.begin(), counts.end());
  std::sort(cells.begin(), cells.end());
  double info = 0.0;
  const double dn = static_cast<double>(n);
  for (const auto& [key, c] : cells) {
    const long k = key / kb, l = key % kb;
    const double p = static_cast<double>(c) / dn;
    info += p * std::log(static_cast<double>(c) * dn /
                         (static_cast<double>(row[k]) * static_cast<double>(col[l])));
  }
  return info;
}

}  // namespace

ContingencyTable ContingencyTable::build(const Clustering& a,
                                         const Clustering& b) {
  const std::vector<int>& la = a.labels();
  const std::vector<int> lb = a.aligned_labels(b);
  const int kb = b.cluster_count();
  ContingencyTable t;
  t.n = a.node_count();
  t.row_sums.assign(a.cluster_count(), 0);
  t.col_sums.assign(kb, 0);
  std::unordered_map<long, long> counts;
  counts.reserve(la.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    counts[static_cast<long>(la[i]) * kb + lb[i]] += 1;
    t.row_sums[la[i]] += 1;
    t.col_sums[lb[i]] += 1;
  }
  std::vector<std::pair<long, long>> cells(counts.begin(), counts.end());
  std::sort(cells.begin(), cells.end());
  t.cells.reserve(cells.size());
  for (const auto& [key, c] : cells)
    t.cells.emplace_back(static_cast<int>(key / kb), static_cast<int>(key % kb), c);
  return t;
}

Matrix ContingencyTable::dense() const {
  Matrix m = Matrix::Zero(row_sums.size(), col_sums.size());
  for (const auto& [k, l, c] : cells) m(k, l) = static_cast<double>(c);
  return m;
}

double entropy(const Clustering& c) {
  if (c.node_count() == 0) throw InvalidInput("entropy of an empty clustering");
  std::vector<long> counts;
  counts.reserve(c.cluster_count());
  for (int s : c.cluster_sizes()) counts.push_back(s);
  return entropy_of_counts(counts, c.node_count());
}

double mutual_information(const Clustering& a, const Clustering& b) {
  const std::vector<int>& la = a.labels();
  const std::vector<int> lb = a.aligned_labels(b);
  // Canonical orientation: the lexicographically smaller label vector is the
  // row side, so (a,b) and (b,a) run the same float operations.
  if (std::lexicographical_compare(lb.begin(), lb.end(), la.begin(), la.end()))
    return mutual_information_labels(lb, la, b.cluster_count(), a.cluster_count());
  return mutual_information_labels(la, lb, a.cluster_count(), b.cluster_count());
}

double vi_distance(const Clustering& a, const Clustering& b) {
  const double d = entropy(a) + entropy(b) - 2.0 * mutual_information(a, b);
  return std::max(0.0, d);
}

double setwise_information(const std::vector<Clustering>& cs) {
  if (cs.empty())
    throw InvalidInput("setwise information needs at least one clustering");
  const Clustering& base = cs.front();
  std::vector<int> cell = base.labels();
  long n_cells = base.cluster_count();
  for (std::size_t idx = 1; idx < cs.size(); ++idx) {
    const std::vector<int> lb = base.aligned_labels(cs[idx]);
    const long kb = cs[idx].cluster_count();
    std::unordered_map<long, int> remap;
    remap.reserve(cell.size());
    int next = 0;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const long key = static_cast<long>(cell[i]) * kb + lb[i];
      auto [it, inserted] = remap.emplace(key, next);
      if (inserted) ++next;
      cell[i] = it->second;
    }
    n_cells = next;
    if (n_cells > kSetwiseCellCap)
      throw LimitError(
          "product partition exceeds 10^6 cells; use the greedy ordering path");
  }
  std::vector<long> counts(n_cells, 0);
  for (int c : cell) counts[c] += 1;
  return entropy_of_counts(counts, base.node_count());
}

Matrix vi_matrix(const std::vector<Clustering>& cs) {
  if (cs.empty()) throw InvalidInput("vi matrix of an empty ensemble");
  const int n = static_cast<int>(cs.size());
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = vi_distance(cs[i], cs[j]);
      m(i, j) = d;
      m(j, i) = d;
    }
  }
  return m;
}

std::optional<double> pearson_correlation(const std::vector<double>& x,
                                          const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace mgc
