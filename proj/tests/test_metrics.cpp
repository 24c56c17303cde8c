#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mgc/errors.hpp"
#include "mgc/metrics.hpp"
#include "test_util.hpp"

using namespace mgc;
using namespace testutil;

namespace {

// n=4 fixtures from the worked examples: {ab|cd}, {ac|bd}, {abc|d}.
const Clustering kAB_CD = make_clustering({0, 0, 1, 1});
const Clustering kAC_BD = make_clustering({0, 1, 0, 1});
const Clustering kABC_D = make_clustering({0, 0, 0, 1});

}  // namespace

TEST_CASE("entropy of a single cluster is zero") {
  CHECK(entropy(make_clustering({0, 0, 0})) == 0.0);
}

TEST_CASE("entropy of all singletons is ln n") {
  CHECK(entropy(make_clustering({0, 1, 2, 3})) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("entropy of sizes (3,1) matches the hand value") {
  CHECK(entropy(kABC_D) == doctest::Approx(0.5623351446188083).epsilon(1e-12));
}

TEST_CASE("mutual information with itself is the entropy") {
  CHECK(mutual_information(kAB_CD, kAB_CD) ==
        doctest::Approx(entropy(kAB_CD)).epsilon(1e-12));
}

TEST_CASE("orthogonal equal splits share no information") {
  CHECK(mutual_information(kAB_CD, kAC_BD) == doctest::Approx(0.0));
}

TEST_CASE("mutual information matches the direct contingency evaluation") {
  // I({ab|cd},{abc|d}) = 0.5 ln(4/3) + 0.25 ln(2/3) + 0.25 ln 2.
  const double expected =
      0.5 * std::log(4.0 / 3.0) + 0.25 * std::log(2.0 / 3.0) + 0.25 * std::log(2.0);
  CHECK(mutual_information(kAB_CD, kABC_D) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.2158).epsilon(1e-3));
}

TEST_CASE("contingency table has consistent marginals") {
  const ContingencyTable t = ContingencyTable::build(kAB_CD, kABC_D);
  CHECK(t.n == 4);
  long total = 0;
  for (const auto& [k, l, c] : t.cells) total += c;
  CHECK(total == 4);
  CHECK(t.row_sums == std::vector<long>{2, 2});
  CHECK(t.col_sums == std::vector<long>{3, 1});
  CHECK(t.dense().sum() == doctest::Approx(4.0));
}

TEST_CASE("vi distance is zero for identical clusterings") {
  CHECK(vi_distance(kAB_CD, kAB_CD) == 0.0);
  // ... and for relabelings.
  CHECK(vi_distance(kAB_CD, make_clustering({5, 5, 2, 2})) <= 1e-9);
}

TEST_CASE("vi of orthogonal splits is 2 ln 2") {
  CHECK(vi_distance(kAB_CD, kAC_BD) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("vi of singletons vs one cluster is ln n") {
  CHECK(vi_distance(make_clustering({0, 1, 2, 3}), make_clustering({0, 0, 0, 0})) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("vi rejects different node sets") {
  const Clustering a = make_clustering({0, 1});
  const Clustering b(std::vector<std::string>{"x", "y"}, std::vector<int>{0, 1});
  CHECK_THROWS_AS(vi_distance(a, b), SemanticMismatch);
}

TEST_CASE("vi agrees with the independent oracle on random pairs") {
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const Clustering a = random_clustering(30, 6, rng);
    const Clustering b = random_clustering(30, 6, rng);
    CHECK(vi_distance(a, b) == doctest::Approx(vi_oracle(a, b)).epsilon(1e-9));
  }
}

TEST_CASE("vi satisfies the metric axioms on random triples") {
  Rng rng(103);
  const double bound = std::log(50.0);
  for (int trial = 0; trial < 60; ++trial) {
    const Clustering a = random_clustering(50, 8, rng);
    const Clustering b = random_clustering(50, 8, rng);
    const Clustering c = random_clustering(50, 8, rng);
    const double dab = vi_distance(a, b);
    const double dba = vi_distance(b, a);
    CHECK(dab == dba);  // exact
    CHECK(dab >= 0.0);
    CHECK(dab <= bound + 1e-9);
    CHECK(vi_distance(a, c) <= dab + vi_distance(b, c) + 1e-9);
  }
}

TEST_CASE("relabeling clusters changes no metric value") {
  Rng rng(107);
  const Clustering a = random_clustering(40, 5, rng);
  const Clustering b = random_clustering(40, 5, rng);
  // Permute b's labels.
  std::vector<int> permuted(b.labels());
  for (int& l : permuted) l = (l * 7 + 3) % 97;
  const Clustering b2(b.nodes(), permuted);
  CHECK(vi_distance(a, b) == doctest::Approx(vi_distance(a, b2)).epsilon(1e-12));
  CHECK(entropy(b) == doctest::Approx(entropy(b2)).epsilon(1e-12));
}

TEST_CASE("setwise information of one clustering is its entropy") {
  CHECK(setwise_information({kABC_D}) ==
        doctest::Approx(entropy(kABC_D)).epsilon(1e-12));
}

TEST_CASE("setwise information of the orthogonal pair is ln 4") {
  CHECK(setwise_information({kAB_CD, kAC_BD}) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("duplicate clusterings add no setwise information") {
  const double one = setwise_information({kAB_CD, kABC_D});
  const double dup = setwise_information({kAB_CD, kABC_D, kABC_D});
  CHECK(one == doctest::Approx(dup).epsilon(1e-12));
}

TEST_CASE("setwise information is monotone and bounded by ln n") {
  Rng rng(109);
  std::vector<Clustering> cs;
  double prev = 0.0;
  for (int i = 0; i < 5; ++i) {
    cs.push_back(random_clustering(60, 5, rng));
    const double s = setwise_information(cs);
    CHECK(s >= prev - 1e-9);
    CHECK(s <= std::log(60.0) + 1e-9);
    prev = s;
  }
}

TEST_CASE("vi links to setwise information") {
  Rng rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    const Clustering a = random_clustering(25, 5, rng);
    const Clustering b = random_clustering(25, 5, rng);
    const double lhs = vi_distance(a, b);
    const double rhs =
        2.0 * setwise_information({a, b}) - entropy(a) - entropy(b);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("vi matrix is symmetric with a zero diagonal") {
  CHECK(vi_matrix({kAB_CD}).isZero(0.0));
  const Matrix two = vi_matrix({kAB_CD, make_clustering({3, 3, 9, 9})});
  CHECK(two.cwiseAbs().maxCoeff() <= 1e-9);  // identical up to relabeling

  const std::vector<Clustering> cs = {kAB_CD, kAC_BD, kABC_D};
  const Matrix m = vi_matrix(cs);
  for (int i = 0; i < 3; ++i) {
    CHECK(m(i, i) == 0.0);
    for (int j = 0; j < 3; ++j) {
      CHECK(m(i, j) == m(j, i));
      if (i != j)
        CHECK(m(i, j) == doctest::Approx(vi_oracle(cs[i], cs[j])).epsilon(1e-9));
    }
  }
}

TEST_CASE("pearson correlation handles degenerate input") {
  CHECK_FALSE(pearson_correlation({1, 1, 1}, {1, 2, 3}).has_value());
  const auto perfect = pearson_correlation({1, 2, 3, 4}, {10, 20, 30, 40});
  REQUIRE(perfect.has_value());
  CHECK(*perfect == doctest::Approx(1.0).epsilon(1e-12));
}
