#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mgc/community.hpp"
#include "mgc/errors.hpp"
#include "mgc/io.hpp"
#include "mgc/multigraph.hpp"
#include "test_util.hpp"

using namespace mgc;

namespace {

Vector vec(std::initializer_list<double> vals) {
  Vector v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

MultiGraph two_type_fixture() {
  return MultiGraph::from_edges(
      {"a", "b"},
      {{"n1", "n2", vec({2, 3})}, {"n2", "n3", vec({0.24, 0})},
       {"n1", "n3", vec({0.2, 0.5})}, {"n3", "n4", vec({0, 2})}});
}

}  // namespace

TEST_CASE("load_multigraph parses the minimal file") {
  const auto path = write_temp("mg_min.tsv", "# types: a b\nn1\tn2\t1.0\t2.0\n");
  const MultiGraph g = load_multigraph(path);
  CHECK(g.type_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.node_count() == 2);
  CHECK(g.weights()(0, 0) == 1.0);
  CHECK(g.weights()(0, 1) == 2.0);
}

TEST_CASE("load_multigraph rejects self-loops") {
  const auto path = write_temp("mg_loop.tsv", "types: a b\nn1\tn1\t1.0\t2.0\n");
  CHECK_THROWS_AS(load_multigraph(path), InvalidInput);
}

TEST_CASE("load_multigraph rejects duplicate unordered pairs") {
  const auto path =
      write_temp("mg_dup.tsv", "types: a b\nn1\tn2\t1\t0\nn2\tn1\t0\t1\n");
  CHECK_THROWS_AS(load_multigraph(path), InvalidInput);
}

TEST_CASE("load_multigraph reports dimension mismatches with line numbers") {
  const auto path = write_temp("mg_dim.tsv", "types: a b\nn1\tn2\t1.0\n");
  try {
    load_multigraph(path);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
}

TEST_CASE("load_multigraph rejects negative weights and honors node lines") {
  CHECK_THROWS_AS(
      load_multigraph(write_temp("mg_neg.tsv", "types: a\nn1\tn2\t-1\n")),
      InvalidInput);
  const MultiGraph g = load_multigraph(
      write_temp("mg_iso.tsv", "types: a\nnode: lonely\nn1\tn2\t1\n"));
  CHECK(g.node_count() == 3);
  CHECK(g.node_index("lonely") == 0);
}

TEST_CASE("multigraph round-trips through save/load byte-identically") {
  const MultiGraph g = two_type_fixture();
  const auto p1 = std::filesystem::temp_directory_path() / "mg_rt1.tsv";
  const auto p2 = std::filesystem::temp_directory_path() / "mg_rt2.tsv";
  save_multigraph(g, p1);
  save_multigraph(load_multigraph(p1), p2);
  CHECK(file_digest(p1) == file_digest(p2));
}

TEST_CASE("normalize_edge_types scales each type to unit norm") {
  const MultiGraph g = MultiGraph::from_edges(
      {"a"}, {{"x", "y", vec({3})}, {"y", "z", vec({4})}});
  const MultiGraph n = normalize_edge_types(g);
  CHECK(n.weights()(0, 0) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(n.weights()(1, 0) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("normalize_edge_types is idempotent within 1e-12") {
  const MultiGraph g = two_type_fixture();
  const MultiGraph once = normalize_edge_types(g);
  const MultiGraph twice = normalize_edge_types(once);
  CHECK((once.weights() - twice.weights()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("normalize_edge_types verifies per-type norms directly") {
  const MultiGraph g = MultiGraph::from_edges(
      {"t0", "t1"}, {{"x", "y", vec({1, 2})}, {"y", "z", vec({0, 2})}});
  const MultiGraph n = normalize_edge_types(g);
  for (int t = 0; t < 2; ++t) {
    double ss = 0.0;
    for (int e = 0; e < n.edge_count(); ++e) ss += n.weights()(e, t) * n.weights()(e, t);
    CHECK(std::sqrt(ss) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("normalize_edge_types names an all-zero type") {
  const MultiGraph g = MultiGraph::from_edges(
      {"live", "dead"}, {{"x", "y", vec({1, 0})}});
  try {
    normalize_edge_types(g);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("dead") != std::string::npos);
  }
}

TEST_CASE("aggregate_linear projects coordinates exactly") {
  const MultiGraph g = MultiGraph::from_edges({"a", "b"}, {{"u", "v", vec({2, 3})}});
  const Graph out = aggregate_linear(g, vec({1, 0}), false);
  REQUIRE(out.edge_count() == 1);
  CHECK(out.edges()[0].w == 2.0);
}

TEST_CASE("aggregate_linear clamps negative composites to zero and drops them") {
  const MultiGraph g = MultiGraph::from_edges({"a", "b"}, {{"u", "v", vec({2, 3})}});
  const Graph out = aggregate_linear(g, vec({-1, 0.5}), true);
  CHECK(out.edge_count() == 0);  // max(0, -0.5) drops the edge
  CHECK_THROWS_AS(aggregate_linear(g, vec({-1, 0.5}), false), InvalidInput);
}

TEST_CASE("aggregate_linear computes dot products") {
  const MultiGraph g = MultiGraph::from_edges({"a", "b"}, {{"u", "v", vec({1, 1})}});
  const Graph out = aggregate_linear(g, vec({0.6, 0.8}), false);
  REQUIRE(out.edge_count() == 1);
  CHECK(out.edges()[0].w == doctest::Approx(1.4).epsilon(1e-12));
}

TEST_CASE("aggregate_linear rejects dimension mismatches") {
  const MultiGraph g = two_type_fixture();
  CHECK_THROWS_AS(aggregate_linear(g, vec({1, 1, 1}), false), SemanticMismatch);
}

TEST_CASE("aggregate_product multiplies and drops zero factors") {
  const MultiGraph g = MultiGraph::from_edges(
      {"a", "b"}, {{"u", "v", vec({2, 3})}, {"v", "w", vec({2, 0})}});
  const Graph out = aggregate_product(g, "a", "b");
  REQUIRE(out.edge_count() == 1);
  CHECK(out.edges()[0].w == 6.0);
}

TEST_CASE("aggregate_product allows self-pairs (squares)") {
  const MultiGraph g = MultiGraph::from_edges({"a"}, {{"u", "v", vec({1.5})}});
  const Graph out = aggregate_product(g, "a", "a");
  REQUIRE(out.edge_count() == 1);
  CHECK(out.edges()[0].w == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("aggregate_product is commutative edge-for-edge") {
  const MultiGraph g = two_type_fixture();
  const Graph ab = aggregate_product(g, "a", "b");
  const Graph ba = aggregate_product(g, "b", "a");
  REQUIRE(ab.edge_count() == ba.edge_count());
  for (int e = 0; e < ab.edge_count(); ++e) {
    CHECK(ab.edges()[e].u == ba.edges()[e].u);
    CHECK(ab.edges()[e].v == ba.edges()[e].v);
    CHECK(ab.edges()[e].w == ba.edges()[e].w);
  }
}

TEST_CASE("aggregate_product rejects unknown type names") {
  const MultiGraph g = two_type_fixture();
  CHECK_THROWS_AS(aggregate_product(g, "a", "zzz"), InvalidInput);
}

TEST_CASE("aggregate_union keeps the max of the two types") {
  const MultiGraph g = MultiGraph::from_edges(
      {"a", "b", "c"},
      {{"u", "v", vec({0.24, 0, 1})}, {"v", "w", vec({0.2, 0.5, 0})},
       {"u", "w", vec({0, 0, 3})}});
  const Graph out = aggregate_union(g, "a", "b");
  REQUIRE(out.edge_count() == 2);
  CHECK(out.edges()[0].w == 0.24);  // one-sided
  CHECK(out.edges()[1].w == 0.5);   // max
  // u--w is stored only for type c and is absent from the a|b union.
  for (const auto& e : out.edges()) CHECK_FALSE((e.u == 0 && e.v == 2));
}

TEST_CASE("linear aggregation is positively homogeneous; modularity is scale-invariant") {
  const MultiGraph g = two_type_fixture();
  const Vector alpha = vec({0.7, 0.3});
  const Graph base = aggregate_linear(g, alpha, true);
  const Graph scaled = aggregate_linear(g, 2.5 * alpha, true);
  REQUIRE(base.edge_count() == scaled.edge_count());
  for (int e = 0; e < base.edge_count(); ++e)
    CHECK(scaled.edges()[e].w == doctest::Approx(2.5 * base.edges()[e].w).epsilon(1e-12));

  const Clustering c(g.nodes(), std::vector<int>{0, 0, 1, 1});
  CHECK(modularity(base, c) ==
        doctest::Approx(modularity(scaled, c)).epsilon(1e-12));
}

TEST_CASE("coordinate aggregation equals extracting the type") {
  const MultiGraph g = two_type_fixture();
  const Graph by_alpha = aggregate_linear(g, vec({0, 1}), false);
  const Graph by_name = extract_type(g, "b");
  REQUIRE(by_alpha.edge_count() == by_name.edge_count());
  for (int e = 0; e < by_alpha.edge_count(); ++e)
    CHECK(by_alpha.edges()[e].w == by_name.edges()[e].w);
}

TEST_CASE("multigraph invariants reject bad construction") {
  CHECK_THROWS_AS(MultiGraph::from_edges({"a"}, {{"u", "u", vec({1})}}),
                  InvalidInput);
  CHECK_THROWS_AS(MultiGraph::from_edges({"a"}, {{"u", "v", vec({0})}}),
                  InvalidInput);
  CHECK_THROWS_AS(
      MultiGraph::from_edges({"a"}, {{"u", "v", vec({1})}, {"v", "u", vec({1})}}),
      InvalidInput);
}
