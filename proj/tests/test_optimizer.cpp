#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "mgc/errors.hpp"
#include "mgc/optimizer.hpp"

using namespace mgc;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

const Objective quadratic = [](const Vector& x) {
  return -(x[0] - 0.3) * (x[0] - 0.3) - (x[1] + 0.2) * (x[1] + 0.2);
};

}  // namespace

TEST_CASE("pattern search finds the quadratic maximum on a box") {
  SearchConfig cfg;
  const SearchResult r =
      pattern_search(quadratic, vec2(0, 0), Domain::box(-1, 1), cfg);
  CHECK(r.converged);
  CHECK(std::abs(r.best_point[0] - 0.3) <= 1e-3);
  CHECK(std::abs(r.best_point[1] + 0.2) <= 1e-3);
  CHECK(r.evaluations <= 600);
}

TEST_CASE("the 1-d sphere is the two-point domain") {
  SearchConfig cfg;
  const Objective f = [](const Vector& x) { return 3.0 * x[0]; };
  Vector start(1);
  start << -1.0;
  const SearchResult r = pattern_search(f, start, Domain::sphere(), cfg);
  CHECK(r.best_point[0] == 1.0);
  CHECK(r.best_value == 3.0);
  CHECK(r.evaluations == 2);
  CHECK(r.converged);
}

TEST_CASE("constant objectives converge at the start point") {
  SearchConfig cfg;
  const Objective f = [](const Vector&) { return 42.0; };
  const SearchResult r = pattern_search(f, vec2(0.25, -0.5), Domain::box(-1, 1), cfg);
  CHECK(r.converged);
  CHECK(r.best_value == 42.0);
  CHECK(r.best_point[0] == 0.25);
  CHECK(r.best_point[1] == -0.5);
}

TEST_CASE("sphere candidates are projected to unit norm") {
  SearchConfig cfg;
  const Objective f = [](const Vector& x) { return x[0] + 0.5 * x[1]; };
  const SearchResult r = pattern_search(f, vec2(1, 0), Domain::sphere(), cfg);
  CHECK(std::abs(r.best_point.norm() - 1.0) <= 1e-9);
  // Optimum of a linear functional on the circle is the normalized gradient.
  CHECK(std::abs(r.best_point[0] - 2.0 / std::sqrt(5.0)) <= 1e-2);
  CHECK(std::abs(r.best_point[1] - 1.0 / std::sqrt(5.0)) <= 1e-2);
}

TEST_CASE("the incumbent trace is monotone nondecreasing") {
  SearchConfig cfg;
  const SearchResult r =
      pattern_search(quadratic, vec2(-0.9, 0.8), Domain::box(-1, 1), cfg);
  REQUIRE_FALSE(r.incumbent_trace.empty());
  CHECK(static_cast<long>(r.incumbent_trace.size()) == r.evaluations);
  for (std::size_t i = 1; i < r.incumbent_trace.size(); ++i)
    CHECK(r.incumbent_trace[i] >= r.incumbent_trace[i - 1]);
}

TEST_CASE("identical configuration gives bit-identical results") {
  SearchConfig cfg;
  cfg.seed = 99;
  const SearchResult a = multistart(quadratic, 2, Domain::box(-1, 1), cfg);
  const SearchResult b = multistart(quadratic, 2, Domain::box(-1, 1), cfg);
  CHECK(a.best_value == b.best_value);
  CHECK(a.evaluations == b.evaluations);
  CHECK((a.best_point.array() == b.best_point.array()).all());
}

TEST_CASE("budget 0 and NaN objectives are errors") {
  SearchConfig cfg;
  cfg.max_evaluations = 0;
  CHECK_THROWS_AS(pattern_search(quadratic, vec2(0, 0), Domain::box(-1, 1), cfg),
                  InvalidInput);
  SearchConfig ok;
  const Objective bad = [](const Vector&) { return std::nan(""); };
  CHECK_THROWS_AS(pattern_search(bad, vec2(0, 0), Domain::box(-1, 1), ok),
                  InvalidInput);
}

TEST_CASE("multistart with one start equals pattern search from that start") {
  SearchConfig cfg;
  cfg.seed = 4;
  cfg.n_starts = 1;
  const std::vector<Vector> starts =
      multistart_start_points(2, Domain::box(-1, 1), cfg);
  REQUIRE(starts.size() == 1);
  const SearchResult direct =
      pattern_search(quadratic, starts[0], Domain::box(-1, 1), cfg);
  const SearchResult multi = multistart(quadratic, 2, Domain::box(-1, 1), cfg);
  CHECK(multi.best_value == direct.best_value);
  CHECK((multi.best_point.array() == direct.best_point.array()).all());
  CHECK(multi.evaluations == direct.evaluations);
}

TEST_CASE("multistart escapes the wrong basin of a bimodal objective") {
  // Two Gaussian bumps at -0.7 (tall) and +0.7 (short); a start near +0.7
  // stays in the short basin, multistart finds the tall one.
  const Objective bimodal = [](const Vector& x) {
    const double a = x[0] + 0.7, b = x[0] - 0.7;
    return 2.0 * std::exp(-50.0 * a * a) + 1.0 * std::exp(-50.0 * b * b);
  };
  SearchConfig cfg;
  cfg.seed = 12;
  cfg.n_starts = 8;
  Vector near_short(1);
  near_short << 0.7;
  const SearchResult stuck =
      pattern_search(bimodal, near_short, Domain::box(-1, 1), cfg);
  CHECK(std::abs(stuck.best_point[0] - 0.7) <= 1e-2);
  const SearchResult global = multistart(bimodal, 1, Domain::box(-1, 1), cfg);
  CHECK(std::abs(global.best_point[0] + 0.7) <= 1e-2);
  // Dense grid confirms the basin choice.
  double grid_best = -1.0, grid_arg = 0.0;
  for (double x = -1.0; x <= 1.0; x += 1e-3) {
    Vector v(1);
    v << x;
    if (bimodal(v) > grid_best) {
      grid_best = bimodal(v);
      grid_arg = x;
    }
  }
  CHECK(std::abs(global.best_point[0] - grid_arg) <= 1e-2);
}

TEST_CASE("warm starts are searched before the seeded random starts") {
  // Place a warm start in the tall basin; a tiny budget that only covers the
  // first run still lands there.
  const Objective bimodal = [](const Vector& x) {
    const double a = x[0] + 0.7, b = x[0] - 0.7;
    return 2.0 * std::exp(-50.0 * a * a) + 1.0 * std::exp(-50.0 * b * b);
  };
  SearchConfig cfg;
  cfg.seed = 1;
  cfg.n_starts = 1;
  cfg.max_evaluations = 40;
  Vector warm(1);
  warm << -0.65;
  const SearchResult r =
      multistart(bimodal, 1, Domain::box(-1, 1), cfg, {warm});
  CHECK(std::abs(r.best_point[0] + 0.7) <= 1e-2);
}

TEST_CASE("an exhausted budget mid-start reports converged=false") {
  SearchConfig cfg;
  cfg.seed = 5;
  cfg.n_starts = 8;
  cfg.max_evaluations = 25;  // not enough for eight starts
  const SearchResult r = multistart(quadratic, 2, Domain::box(-1, 1), cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations <= 25);
}

TEST_CASE("config round-trips through dump and parse") {
  SearchConfig cfg;
  cfg.seed = 77;
  cfg.n_samples = 123;
  cfg.initial_step = 0.5;
  cfg.step_tolerance = 1e-5;
  cfg.lambda = 2.5;
  const SearchConfig back = parse_config_text(dump_config(cfg));
  CHECK(back.seed == cfg.seed);
  CHECK(back.n_samples == cfg.n_samples);
  CHECK(back.initial_step == cfg.initial_step);
  CHECK(back.step_tolerance == cfg.step_tolerance);
  CHECK(back.lambda == cfg.lambda);
}

TEST_CASE("config files reject unknown keys and bad invariants") {
  CHECK_THROWS_AS(parse_config_text("bogus=1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_config_text("initial_step=0.1\nstep_tolerance=0.5\n"),
                  InvalidInput);
  const SearchConfig cfg = parse_config_text("# comment\nseed=3\n\nn_starts=2\n");
  CHECK(cfg.seed == 3);
  CHECK(cfg.n_starts == 2);
}
