// mgc: command-line front end of the multilayer graph clustering toolkit.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mgc/community.hpp"
#include "mgc/discovery.hpp"
#include "mgc/errors.hpp"
#include "mgc/io.hpp"
#include "mgc/metaclustering.hpp"
#include "mgc/metrics.hpp"
#include "mgc/multigraph.hpp"
#include "mgc/optimizer.hpp"
#include "mgc/recovery.hpp"
#include "mgc/synth.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;
using namespace mgc;

namespace {

struct ManifestWriter {
  std::string command;
  json config = json::object();
  json inputs = json::object();
  std::vector<std::string> outputs;
  long evaluations = -1;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  explicit ManifestWriter(std::string cmd) : command(std::move(cmd)) {}

  void input(const fs::path& path) { inputs[path.string()] = file_digest(path); }
  void output(const fs::path& path) { outputs.push_back(path.string()); }

  void write(const fs::path& path) {
    json m;
    m["command"] = command;
    m["config"] = config;
    m["inputs"] = inputs;
    m["outputs"] = outputs;
    if (evaluations >= 0) m["evaluations"] = evaluations;
    m["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    std::ofstream out(path);
    if (!out) throw IoError("cannot write manifest " + path.string());
    out << m.dump(2) << "\n";
  }
};

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      values.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw InvalidInput("bad number '" + token + "' in list '" + text + "'");
    }
  }
  if (values.empty()) throw InvalidInput("empty number list");
  return values;
}

std::pair<std::string, std::string> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == text.size())
    throw InvalidInput("expected two comma-separated type names, got '" + text +
                       "'");
  return {text.substr(0, comma), text.substr(comma + 1)};
}

Vector to_vector(const std::vector<double>& v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

json vector_json(const Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

void print_six(const char* label, double value) {
  std::printf("%s%.6f\n", label, value);
}

SearchConfig config_from(const std::string& config_file, std::uint64_t seed,
                         long budget, int samples, int starts, double lambda,
                         double steepness) {
  SearchConfig cfg;
  if (!config_file.empty()) cfg = load_config(config_file);
  if (seed != static_cast<std::uint64_t>(-1)) cfg.seed = seed;
  if (budget > 0) cfg.max_evaluations = budget;
  if (samples > 0) cfg.n_samples = samples;
  if (starts > 0) cfg.n_starts = starts;
  if (lambda >= 0) cfg.lambda = lambda;
  if (steepness > 0) cfg.steepness = steepness;
  cfg.validate();
  return cfg;
}

json config_json(const SearchConfig& cfg) {
  json c;
  c["seed"] = cfg.seed;
  c["n_samples"] = cfg.n_samples;
  c["n_starts"] = cfg.n_starts;
  c["initial_step"] = cfg.initial_step;
  c["step_tolerance"] = cfg.step_tolerance;
  c["max_evaluations"] = cfg.max_evaluations;
  c["contraction"] = cfg.contraction;
  c["lambda"] = cfg.lambda;
  c["steepness"] = cfg.steepness;
  return c;
}

void write_json(const json& j, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

void write_holding_csv(const MultiGraph& g, const HoldingReport& report,
                       const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "node,holding_power\n";
  for (int i = 0; i < g.node_count(); ++i)
    out << g.nodes()[i] << "," << format_double(report.per_node[i]) << "\n";
}

// Fixed-width histogram of holding powers: bin width 0.05 of max |H|.
void write_holding_histogram(const HoldingReport& report, const fs::path& path) {
  const double max_abs = report.per_node.cwiseAbs().maxCoeff();
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "bin_low,bin_high,count\n";
  if (max_abs <= 0.0) {
    out << "0,0," << report.per_node.size() << "\n";
    return;
  }
  const double width = 0.05 * max_abs;
  const int bins = 40;  // covers [-max,max]
  std::vector<long> counts(bins, 0);
  for (Eigen::Index i = 0; i < report.per_node.size(); ++i) {
    int b = static_cast<int>(std::floor((report.per_node[i] + max_abs) / width));
    b = std::min(std::max(b, 0), bins - 1);
    ++counts[b];
  }
  for (int b = 0; b < bins; ++b)
    out << format_double(-max_abs + b * width) << ","
        << format_double(-max_abs + (b + 1) * width) << "," << counts[b] << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"multilayer graph clustering toolkit"};
  app.require_subcommand(1);

  // Option storage. Output paths and grids are per-subcommand so their
  // defaults cannot leak across commands.
  std::string graph_path, truth_path, config_file, alpha_text, pair_text,
      union_text, ref_alpha_text, mode_text = "exact", reference_path;
  std::string agg_out = "aggregate.tsv", cl_out = "clustering.tsv",
      mod_out = "modularity.json", vi_out = "vi.json", par_out = "pareto.csv",
      cor_out = "correlation.csv", cons_out = "consensus.tsv",
      ord_out = "ordering.json", pairs_out = "pairs.csv",
      inv_out = "groups.json", pert_out = "perturbed.tsv",
      bench_out = "bench.csv";
  std::string rec_dir = "recover_out", meta_dir = "metacluster_out",
      disc_dir = "discover_out", gen_dir = "generated";
  std::string rec_grid = "1", cor_grid = "0.1,1,10";
  std::vector<std::string> clustering_paths, given_paths;
  std::uint64_t seed = static_cast<std::uint64_t>(-1);
  long budget = -1;
  int samples = -1, starts = -1, copies = 1, meta_samples = 200;
  double lambda = -1;
  bool clamp = false, singletons = false, normalize = false;

  // aggregate
  auto* agg = app.add_subcommand("aggregate", "reduce a multigraph to one weight");
  agg->add_option("-g,--graph", graph_path)->required();
  agg->add_option("-o,--out", agg_out);
  agg->add_option("--alpha", alpha_text, "comma-separated linear weights");
  agg->add_option("--pair", pair_text, "a,b product aggregation");
  agg->add_option("--union", union_text, "a,b union aggregation");
  agg->add_flag("--clamp", clamp, "truncate negative composites at 0");

  // cluster
  auto* cl = app.add_subcommand("cluster", "greedy modularity clustering");
  cl->add_option("-g,--graph", graph_path)->required();
  cl->add_option("-o,--out", cl_out);

  // modularity
  auto* mod = app.add_subcommand("modularity", "score a clustering");
  mod->add_option("-g,--graph", graph_path)->required();
  mod->add_option("-c,--clustering", truth_path)->required();
  mod->add_option("-o,--out", mod_out);

  // vi
  auto* vi = app.add_subcommand("vi", "variation of information distance");
  vi->add_option("clusterings", clustering_paths)->expected(2);
  vi->add_option("-o,--out", vi_out);

  // recover
  auto* rec = app.add_subcommand("recover", "recover aggregation weights");
  rec->add_option("-g,--graph", graph_path)->required();
  rec->add_option("-t,--truth", truth_path)->required();
  rec->add_option("--steepness-grid", rec_grid);
  rec->add_option("--budget", budget);
  rec->add_option("--seed", seed);
  rec->add_option("--starts", starts);
  rec->add_option("--config", config_file);
  rec->add_option("--out-dir", rec_dir);

  // pareto
  auto* par = app.add_subcommand("pareto", "positive-fraction/modularity frontier");
  par->add_option("-g,--graph", graph_path)->required();
  par->add_option("-t,--truth", truth_path)->required();
  par->add_option("--samples", samples);
  par->add_option("--seed", seed);
  par->add_option("--budget", budget);
  par->add_option("--reference-alpha", ref_alpha_text);
  par->add_option("--config", config_file);
  par->add_option("-o,--out", par_out);

  // correlate
  auto* cor = app.add_subcommand("correlate", "objective/VI correlation sweep");
  cor->add_option("-g,--graph", graph_path)->required();
  cor->add_option("-t,--truth", truth_path)->required();
  cor->add_option("--steepness-grid", cor_grid);
  cor->add_option("--samples", samples);
  cor->add_option("--seed", seed);
  cor->add_option("--config", config_file);
  cor->add_option("-o,--out", cor_out);

  // metacluster
  auto* meta = app.add_subcommand("metacluster", "map the clustering space");
  meta->add_option("-g,--graph", graph_path)->required();
  meta->add_option("--samples", meta_samples);
  meta->add_option("--seed", seed);
  meta->add_flag("--normalize", normalize, "L2-normalize edge types first");
  meta->add_option("--out-dir", meta_dir);

  // consensus
  auto* cons = app.add_subcommand("consensus", "CSPA consensus clustering");
  cons->add_option("clusterings", clustering_paths)->expected(-1);
  cons->add_option("-o,--out", cons_out);

  // order
  auto* ord = app.add_subcommand("order", "order clusterings by information");
  ord->add_option("clusterings", clustering_paths)->expected(-1);
  ord->add_option("--mode", mode_text)->check(CLI::IsMember({"exact", "greedy"}));
  ord->add_option("-o,--out", ord_out);

  // discover
  auto* disc = app.add_subcommand("discover", "find unexpected clusterings");
  disc->add_option("-g,--graph", graph_path)->required();
  disc->add_option("--given", given_paths)->required();
  disc->add_option("--lambda", lambda);
  disc->add_option("--budget", budget);
  disc->add_option("--seed", seed);
  disc->add_option("--config", config_file);
  disc->add_option("--out-dir", disc_dir);

  // pairs
  auto* pairs = app.add_subcommand("pairs", "score singleton and product pairs");
  pairs->add_option("-g,--graph", graph_path)->required();
  pairs->add_option("--reference", reference_path)->required();
  pairs->add_flag("--singletons", singletons);
  pairs->add_option("-o,--out", pairs_out);

  // invariant-groups
  auto* inv = app.add_subcommand("invariant-groups",
                                 "nodes co-clustered in every clustering");
  inv->add_option("clusterings", clustering_paths)->expected(-1);
  inv->add_option("-o,--out", inv_out);

  // generate
  auto* gen = app.add_subcommand("generate", "synthetic fixtures");
  std::string kind = "planted";
  int n = 500, n_clusters = 14, k_types = 1, noise_types = 0, rows = 3, cols = 3,
      points = 30, projections = 16;
  double avg_degree = 30, mixing = 0.7, radius = 2.5, scatter = 0.3,
      grid_epsilon = 0.1;
  gen->add_option("kind", kind)->check(CLI::IsMember({"planted", "grid", "two-factor"}));
  gen->add_option("--n", n);
  gen->add_option("--clusters", n_clusters);
  gen->add_option("--avg-degree", avg_degree);
  gen->add_option("--mixing", mixing);
  gen->add_option("--types", k_types);
  gen->add_option("--noise-types", noise_types);
  gen->add_option("--rows", rows);
  gen->add_option("--cols", cols);
  gen->add_option("--points-per-cell", points);
  gen->add_option("--projections", projections);
  gen->add_option("--radius", radius);
  gen->add_option("--scatter", scatter);
  gen->add_option("--epsilon", grid_epsilon);
  gen->add_option("--seed", seed);
  gen->add_option("--out-dir", gen_dir);

  // perturb
  auto* pert = app.add_subcommand("perturb", "noise the edge weights");
  double sigma_scale = 2.0, nu_lo = 0.0, nu_hi = 1.0;
  pert->add_option("-g,--graph", graph_path)->required();
  pert->add_option("--seed", seed);
  pert->add_option("--copies", copies);
  pert->add_option("--sigma-scale", sigma_scale);
  pert->add_option("--nu-lo", nu_lo);
  pert->add_option("--nu-hi", nu_hi);
  pert->add_option("-o,--out", pert_out);

  // bench
  auto* bench = app.add_subcommand("bench", "time objective evaluations");
  int bench_n = 2000;
  bench->add_option("--n", bench_n, "base node count; also runs 2n");
  bench->add_option("--seed", seed);
  bench->add_option("-o,--out", bench_out);

  // config-dump
  auto* dump = app.add_subcommand("config-dump", "print solver defaults");
  dump->add_option("--config", config_file);

  CLI11_PARSE(app, argc, argv);

  const Clusterer clusterer = cluster_greedy_modularity;
  const std::uint64_t effective_seed = seed == static_cast<std::uint64_t>(-1) ? 0 : seed;

  if (app.got_subcommand(agg)) {
    ManifestWriter manifest("aggregate");
    manifest.input(graph_path);
    const MultiGraph g = load_multigraph(graph_path);
    const int selected = (!alpha_text.empty()) + (!pair_text.empty()) +
                         (!union_text.empty());
    if (selected != 1)
      throw InvalidInput("pass exactly one of --alpha, --pair, --union");
    Graph out = [&] {
      if (!alpha_text.empty()) {
        const Vector alpha = to_vector(parse_csv_doubles(alpha_text));
        manifest.config["alpha"] = vector_json(alpha);
        manifest.config["clamp"] = clamp;
        return aggregate_linear(g, alpha, clamp);
      }
      if (!pair_text.empty()) {
        const auto [a, b] = parse_pair(pair_text);
        manifest.config["pair"] = {a, b};
        return aggregate_product(g, a, b);
      }
      const auto [a, b] = parse_pair(union_text);
      manifest.config["union"] = {a, b};
      return aggregate_union(g, a, b);
    }();
    save_graph(out, agg_out);
    manifest.output(agg_out);
    manifest.write(agg_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(cl)) {
    ManifestWriter manifest("cluster");
    manifest.input(graph_path);
    const Graph g = load_graph(graph_path);
    const Clustering c = clusterer(g);
    save_clustering(c, cl_out);
    const double q = modularity(g, c);
    print_six("modularity=", q);
    json j;
    j["modularity"] = q;
    j["clusters"] = c.cluster_count();
    write_json(j, cl_out + ".report.json");
    manifest.output(cl_out);
    manifest.output(cl_out + ".report.json");
    manifest.write(cl_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(mod)) {
    ManifestWriter manifest("modularity");
    manifest.input(graph_path);
    manifest.input(truth_path);
    const Graph g = load_graph(graph_path);
    const Clustering c = load_clustering(truth_path);
    const double q = modularity(g, c);
    print_six("", q);
    json j;
    j["modularity"] = q;
    write_json(j, mod_out);
    manifest.output(mod_out);
    manifest.write(mod_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(vi)) {
    ManifestWriter manifest("vi");
    manifest.input(clustering_paths[0]);
    manifest.input(clustering_paths[1]);
    const Clustering a = load_clustering(clustering_paths[0]);
    const Clustering b = load_clustering(clustering_paths[1]);
    const double d = vi_distance(a, b);
    print_six("", d);
    json j;
    j["vi_distance"] = d;
    j["entropy_a"] = entropy(a);
    j["entropy_b"] = entropy(b);
    j["mutual_information"] = mutual_information(a, b);
    write_json(j, vi_out);
    manifest.output(vi_out);
    manifest.write(vi_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(rec)) {
    ManifestWriter manifest("recover");
    manifest.input(graph_path);
    manifest.input(truth_path);
    fs::create_directories(rec_dir);
    const MultiGraph g = load_multigraph(graph_path);
    const Clustering truth = load_clustering(truth_path);
    SearchConfig cfg = config_from(config_file, seed, budget, samples, starts,
                                   -1, -1);
    manifest.config = config_json(cfg);
    const std::vector<double> grid = parse_csv_doubles(rec_grid);
    manifest.config["steepness_grid"] = grid;

    json weights;
    weights["per_steepness"] = json::array();
    double best_fraction = -1.0;
    Vector best_alpha;
    double best_steepness = grid.front();
    long evaluations = 0;
    for (double s : grid) {
      SearchConfig step_cfg = cfg;
      step_cfg.steepness = s;
      const RecoveryResult r = recover_weights(g, truth, step_cfg);
      evaluations += r.evaluations;
      json entry;
      entry["steepness"] = s;
      entry["alpha"] = vector_json(r.alpha);
      entry["positive_fraction"] = r.report.positive_fraction;
      entry["objective"] = r.report.objective_value;
      entry["improved"] = r.improved;
      weights["per_steepness"].push_back(entry);
      if (r.report.positive_fraction > best_fraction) {
        best_fraction = r.report.positive_fraction;
        best_alpha = r.alpha;
        best_steepness = s;
      }
    }
    manifest.evaluations = evaluations;
    const HoldingReport best = holding_report(g, best_alpha, truth, best_steepness);
    weights["best"] = {{"alpha", vector_json(best_alpha)},
                       {"steepness", best_steepness},
                       {"positive_fraction", best.positive_fraction},
                       {"objective", best.objective_value}};
    write_json(weights, fs::path(rec_dir) / "weights.json");
    write_holding_csv(g, best, fs::path(rec_dir) / "holding.csv");
    write_holding_histogram(best, fs::path(rec_dir) / "histogram.csv");
    print_six("positive_fraction=", best.positive_fraction);
    manifest.output((fs::path(rec_dir) / "weights.json").string());
    manifest.output((fs::path(rec_dir) / "holding.csv").string());
    manifest.output((fs::path(rec_dir) / "histogram.csv").string());
    manifest.write(fs::path(rec_dir) / "run_manifest.json");
    return 0;
  }

  if (app.got_subcommand(par)) {
    ManifestWriter manifest("pareto");
    manifest.input(graph_path);
    manifest.input(truth_path);
    const MultiGraph g = load_multigraph(graph_path);
    const Clustering truth = load_clustering(truth_path);
    SearchConfig cfg = config_from(config_file, seed, budget, samples, starts,
                                   -1, -1);
    manifest.config = config_json(cfg);
    std::optional<Vector> ref;
    if (!ref_alpha_text.empty()) ref = to_vector(parse_csv_doubles(ref_alpha_text));
    const auto frontier =
        pareto_sweep(g, truth, cfg, ref ? &*ref : nullptr);
    std::ofstream out(par_out);
    if (!out) throw IoError("cannot write " + par_out);
    out << "positive_fraction,normalized_modularity,alpha\n";
    for (const auto& p : frontier) {
      out << format_double(p.positive_fraction) << ","
          << format_double(p.normalized_modularity) << ",";
      for (Eigen::Index i = 0; i < p.alpha.size(); ++i)
        out << (i ? ";" : "") << format_double(p.alpha[i]);
      out << "\n";
    }
    manifest.output(par_out);
    manifest.write(par_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(cor)) {
    ManifestWriter manifest("correlate");
    manifest.input(graph_path);
    manifest.input(truth_path);
    const MultiGraph g = load_multigraph(graph_path);
    const Clustering truth = load_clustering(truth_path);
    SearchConfig cfg = config_from(config_file, seed, budget, samples, starts,
                                   -1, -1);
    manifest.config = config_json(cfg);
    const std::vector<double> grid = parse_csv_doubles(cor_grid);
    const auto points = correlation_sweep(g, truth, clusterer, grid, cfg);
    std::ofstream out(cor_out);
    if (!out) throw IoError("cannot write " + cor_out);
    out << "steepness,pearson_correlation\n";
    for (const auto& p : points) {
      out << format_double(p.steepness) << ",";
      if (p.correlation)
        out << format_double(*p.correlation);
      else
        out << "undefined";
      out << "\n";
    }
    manifest.output(cor_out);
    manifest.write(cor_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(meta)) {
    ManifestWriter manifest("metacluster");
    manifest.input(graph_path);
    if (meta_samples < 2) throw InvalidInput("metacluster needs --samples >= 2");
    fs::create_directories(meta_dir);
    MultiGraph g = load_multigraph(graph_path);
    if (normalize) g = normalize_edge_types(g);
    manifest.config["samples"] = meta_samples;
    manifest.config["seed"] = effective_seed;
    manifest.config["normalize"] = normalize;
    const auto alphas =
        sample_alphas(g.type_count(), meta_samples, effective_seed);
    Ensemble ensemble = sample_clustering_space(g, alphas, clusterer);
    ensemble.seed = effective_seed;
    save_ensemble(ensemble, fs::path(meta_dir) / "ensemble");
    const MetaClusteringReport report = metacluster_report(ensemble, clusterer);

    std::vector<std::string> ids;
    for (int i = 0; i < ensemble.size(); ++i)
      ids.push_back("c" + std::to_string(i));
    save_vi_matrix_csv(vi_matrix(ensemble.clusterings), ids,
                       fs::path(meta_dir) / "vi_matrix.csv");

    json meta_json;
    meta_json["meta_labels"] = report.meta_partition.labels();
    meta_json["kept_meta_labels"] = report.kept_meta_labels;
    meta_json["dropped_meta_labels"] = report.dropped_meta_labels;
    meta_json["representative_sizes"] = report.representative_sizes;
    meta_json["ordering_scores"] = report.ordering_scores;
    meta_json["seriation"] = report.seriation;
    write_json(meta_json, fs::path(meta_dir) / "meta_report.json");
    for (std::size_t r = 0; r < report.representatives.size(); ++r)
      save_clustering(report.representatives[r],
                      fs::path(meta_dir) /
                          ("representative_" + std::to_string(r) + ".tsv"));
    manifest.output((fs::path(meta_dir) / "meta_report.json").string());
    manifest.write(fs::path(meta_dir) / "run_manifest.json");
    std::printf("meta_clusters=%d representatives=%zu\n",
                report.meta_partition.cluster_count(),
                report.representatives.size());
    return 0;
  }

  if (app.got_subcommand(cons)) {
    ManifestWriter manifest("consensus");
    if (clustering_paths.empty()) throw InvalidInput("no clusterings given");
    std::vector<Clustering> cs;
    for (const auto& p : clustering_paths) {
      manifest.input(p);
      cs.push_back(load_clustering(p));
    }
    const Clustering consensus = cspa_consensus(cs, clusterer);
    save_clustering(consensus, cons_out);
    manifest.output(cons_out);
    manifest.write(cons_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(ord)) {
    ManifestWriter manifest("order");
    if (clustering_paths.empty()) throw InvalidInput("no clusterings given");
    std::vector<Clustering> cs;
    for (const auto& p : clustering_paths) {
      manifest.input(p);
      cs.push_back(load_clustering(p));
    }
    const Ordering ordering = order_representatives(
        cs, mode_text == "exact" ? OrderMode::exact : OrderMode::greedy);
    json j;
    j["mode"] = mode_text;
    j["order"] = ordering.order;
    j["scores"] = ordering.scores;
    json files = json::array();
    for (int idx : ordering.order) files.push_back(clustering_paths[idx]);
    j["files"] = files;
    write_json(j, ord_out);
    manifest.output(ord_out);
    manifest.write(ord_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(disc)) {
    ManifestWriter manifest("discover");
    manifest.input(graph_path);
    fs::create_directories(disc_dir);
    const MultiGraph g = load_multigraph(graph_path);
    std::vector<Clustering> given;
    for (const auto& p : given_paths) {
      manifest.input(p);
      given.push_back(load_clustering(p));
    }
    SearchConfig cfg = config_from(config_file, seed, budget, samples, starts,
                                   lambda, -1);
    manifest.config = config_json(cfg);
    const DiscoveryReport report = find_unexpected(g, given, cfg, clusterer);
    json j;
    j["alpha"] = vector_json(report.alpha);
    j["modularity"] = report.modularity;
    j["vi_to_given"] = report.vi_to_given;
    j["scalarized"] = report.scalarized;
    j["empty_aggregate"] = report.empty_aggregate;
    j["low_novelty"] = report.low_novelty;
    json alpha_by_type = json::object();
    for (int t = 0; t < g.type_count(); ++t)
      alpha_by_type[g.edge_types()[t]] = report.alpha[t];
    j["alpha_by_type"] = alpha_by_type;
    write_json(j, fs::path(disc_dir) / "discovery.json");
    save_clustering(report.clustering, fs::path(disc_dir) / "clustering.tsv");
    print_six("modularity=", report.modularity);
    manifest.output((fs::path(disc_dir) / "discovery.json").string());
    manifest.output((fs::path(disc_dir) / "clustering.tsv").string());
    manifest.write(fs::path(disc_dir) / "run_manifest.json");
    return 0;
  }

  if (app.got_subcommand(pairs)) {
    ManifestWriter manifest("pairs");
    manifest.input(graph_path);
    manifest.input(reference_path);
    const MultiGraph g = load_multigraph(graph_path);
    const Clustering reference = load_clustering(reference_path);
    const auto rows = enumerate_pairs(g, reference, clusterer, singletons);
    std::ofstream out(pairs_out);
    if (!out) throw IoError("cannot write " + pairs_out);
    out << "Name,Modularity,VI distance\n";
    for (const auto& row : rows) {
      out << row.label << ",";
      if (row.modularity)
        out << format_double(*row.modularity);
      else
        out << "undefined";
      out << "," << format_double(row.vi_to_reference) << "\n";
    }
    manifest.output(pairs_out);
    manifest.write(pairs_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(inv)) {
    ManifestWriter manifest("invariant-groups");
    if (clustering_paths.empty()) throw InvalidInput("no clusterings given");
    Ensemble e;
    for (const auto& p : clustering_paths) {
      manifest.input(p);
      e.clusterings.push_back(load_clustering(p));
      e.alphas.push_back(Vector());
      e.warnings.emplace_back();
    }
    e.node_universe = e.clusterings.front().nodes();
    const auto groups = invariant_groups(e);
    json j;
    j["groups"] = groups;
    write_json(j, inv_out);
    manifest.output(inv_out);
    manifest.write(inv_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(gen)) {
    ManifestWriter manifest("generate");
    fs::create_directories(gen_dir);
    manifest.config["kind"] = kind;
    manifest.config["seed"] = effective_seed;
    json sidecar;
    sidecar["kind"] = kind;
    sidecar["seed"] = effective_seed;
    if (kind == "planted") {
      PlantedSpec spec;
      spec.n = n;
      spec.n_clusters = n_clusters;
      spec.avg_degree = avg_degree;
      spec.mixing = mixing;
      spec.k_types = k_types;
      spec.noise_types = noise_types;
      spec.seed = effective_seed;
      const auto [g, truth] = generate_planted(spec);
      save_multigraph(g, fs::path(gen_dir) / "graph.tsv");
      save_clustering(truth, fs::path(gen_dir) / "truth.tsv");
      sidecar["n"] = spec.n;
      sidecar["n_clusters"] = spec.n_clusters;
      sidecar["avg_degree"] = spec.avg_degree;
      sidecar["mixing"] = spec.mixing;
      sidecar["k_types"] = spec.k_types;
      sidecar["noise_types"] = spec.noise_types;
      manifest.output((fs::path(gen_dir) / "graph.tsv").string());
      manifest.output((fs::path(gen_dir) / "truth.tsv").string());
    } else if (kind == "grid") {
      GridSpec spec;
      spec.rows = rows;
      spec.cols = cols;
      spec.points_per_cell = points;
      spec.n_projections = projections;
      spec.neighbor_radius = radius;
      spec.scatter = scatter;
      spec.epsilon = grid_epsilon;
      spec.seed = effective_seed;
      const GridFixture fx = generate_grid(spec);
      save_multigraph(fx.graph, fs::path(gen_dir) / "graph.tsv");
      save_clustering(fx.cells, fs::path(gen_dir) / "cells.tsv");
      save_clustering(fx.row_factor, fs::path(gen_dir) / "rows.tsv");
      save_clustering(fx.col_factor, fs::path(gen_dir) / "cols.tsv");
      sidecar["rows"] = rows;
      sidecar["cols"] = cols;
      sidecar["points_per_cell"] = points;
      sidecar["n_projections"] = projections;
      sidecar["neighbor_radius"] = radius;
      sidecar["scatter"] = scatter;
      sidecar["epsilon"] = grid_epsilon;
      sidecar["connected_support"] = fx.connected_support;
      if (!fx.connected_support)
        std::fprintf(stderr, "warning: neighbor radius leaves the support disconnected\n");
      manifest.output((fs::path(gen_dir) / "graph.tsv").string());
    } else {
      TwoFactorSpec spec;
      spec.n = n;
      spec.seed = effective_seed;
      const TwoFactorFixture fx = generate_two_factor(spec);
      save_multigraph(fx.graph, fs::path(gen_dir) / "graph.tsv");
      save_clustering(fx.factor_a, fs::path(gen_dir) / "factor_a.tsv");
      save_clustering(fx.factor_b, fs::path(gen_dir) / "factor_b.tsv");
      sidecar["n"] = spec.n;
      manifest.output((fs::path(gen_dir) / "graph.tsv").string());
    }
    write_json(sidecar, fs::path(gen_dir) / "spec.json");
    manifest.write(fs::path(gen_dir) / "run_manifest.json");
    return 0;
  }

  if (app.got_subcommand(pert)) {
    ManifestWriter manifest("perturb");
    manifest.input(graph_path);
    const MultiGraph g = load_multigraph(graph_path);
    PerturbOptions opts;
    opts.sigma_scale = sigma_scale;
    opts.nu_lo = nu_lo;
    opts.nu_hi = nu_hi;
    manifest.config["sigma_scale"] = sigma_scale;
    manifest.config["nu_lo"] = nu_lo;
    manifest.config["nu_hi"] = nu_hi;
    manifest.config["copies"] = copies;
    manifest.config["seed"] = effective_seed;
    const MultiGraph out =
        copies > 1 ? perturbed_copies(g, copies, effective_seed, opts)
                   : perturb(g, effective_seed, opts);
    save_multigraph(out, pert_out);
    manifest.output(pert_out);
    manifest.write(pert_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(bench)) {
    ManifestWriter manifest("bench");
    manifest.config["n"] = bench_n;
    manifest.config["seed"] = effective_seed;
    std::ofstream out(bench_out);
    if (!out) throw IoError("cannot write " + bench_out);
    out << "edges,mean_seconds\n";
    for (int scale = 1; scale <= 2; ++scale) {
      PlantedSpec spec;
      spec.n = bench_n * scale;
      spec.n_clusters = std::max(2, spec.n / 40);
      spec.avg_degree = 30;
      spec.mixing = 0.5;
      spec.seed = effective_seed + scale;
      const auto [g, truth] = generate_planted(spec);
      const HoldingEvaluator evaluator(g, truth);
      Rng rng(effective_seed);
      const Vector alpha = rng.unit_sphere(g.type_count());
      evaluator.objective(alpha, 1.0);  // warm up
      double total = 0.0;
      for (int run = 0; run < 10; ++run) {
        const auto start = std::chrono::steady_clock::now();
        volatile double sink = evaluator.objective(alpha, 1.0);
        (void)sink;
        total += std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
      }
      out << g.edge_count() << "," << format_double(total / 10.0) << "\n";
    }
    manifest.output(bench_out);
    manifest.write(bench_out + ".manifest.json");
    return 0;
  }

  if (app.got_subcommand(dump)) {
    SearchConfig cfg;
    if (!config_file.empty()) cfg = load_config(config_file);
    std::cout << dump_config(cfg);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SemanticMismatch& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const LimitError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
