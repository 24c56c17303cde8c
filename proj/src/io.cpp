#include "mgc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "mgc/errors.hpp"

namespace mgc {

namespace {

using json = nlohmann::json;

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_weight(const std::string& token, const std::string& path, int line) {
  double v = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end)
    throw InvalidInput(path + ":" + std::to_string(line) + ": bad weight '" +
                       token + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

MultiGraph load_multigraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string where = path.filename().string();

  std::vector<std::string> types;
  bool have_types = false;
  std::vector<std::string> nodes;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<int>(nodes.size()));
    if (inserted) nodes.push_back(name);
    return it->second;
  };

  std::vector<std::pair<int, int>> endpoints;
  std::vector<std::vector<double>> weight_rows;
  std::unordered_set<std::uint64_t> seen;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      // A comment that carries the directive is accepted too.
      const std::string body = strip(line.substr(1));
      if (body.rfind("types:", 0) != 0) continue;
      line = body;
    }
    if (line.rfind("types:", 0) == 0) {
      if (have_types)
        throw InvalidInput(where + ":" + std::to_string(line_no) +
                           ": duplicate types directive");
      if (!endpoints.empty() || !nodes.empty())
        throw InvalidInput(where + ":" + std::to_string(line_no) +
                           ": types directive must precede nodes and edges");
      types = split_ws(line.substr(6));
      if (types.empty())
        throw InvalidInput(where + ":" + std::to_string(line_no) +
                           ": empty types directive");
      have_types = true;
      continue;
    }
    if (line.rfind("node:", 0) == 0) {
      const std::string id = strip(line.substr(5));
      if (id.empty())
        throw InvalidInput(where + ":" + std::to_string(line_no) +
                           ": empty node declaration");
      intern(id);
      continue;
    }
    if (!have_types)
      throw InvalidInput(where + ":" + std::to_string(line_no) +
                         ": edge before types directive");
    const std::vector<std::string> fields = split_ws(line);
    if (fields.size() < 3)
      throw InvalidInput(where + ":" + std::to_string(line_no) +
                         ": expected u v w1..wk");
    if (fields.size() - 2 != types.size())
      throw InvalidInput(where + ":" + std::to_string(line_no) + ": edge carries " +
                         std::to_string(fields.size() - 2) +
                         " weights, expected " + std::to_string(types.size()));
    if (fields[0] == fields[1])
      throw InvalidInput(where + ":" + std::to_string(line_no) + ": self-loop on '" +
                         fields[0] + "'");
    const int u = intern(fields[0]);
    const int v = intern(fields[1]);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(std::max(u, v)) << 32) |
        static_cast<std::uint64_t>(std::min(u, v));
    if (!seen.insert(key).second)
      throw InvalidInput(where + ":" + std::to_string(line_no) +
                         ": duplicate edge '" + fields[0] + "' -- '" + fields[1] +
                         "'");
    std::vector<double> w;
    bool any_positive = false;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      const double value = parse_weight(fields[i], where, line_no);
      if (!std::isfinite(value))
        throw InvalidInput(where + ":" + std::to_string(line_no) +
                           ": non-finite weight " + fields[i]);
      if (value < 0.0)
        throw InvalidInput(where + ":" + std::to_string(line_no) +
                           ": negative weight " + fields[i]);
      any_positive |= value > 0.0;
      w.push_back(value);
    }
    if (!any_positive)
      throw InvalidInput(where + ":" + std::to_string(line_no) +
                         ": edge with all-zero weights");
    endpoints.emplace_back(u, v);
    weight_rows.push_back(std::move(w));
  }
  if (!have_types) throw InvalidInput(where + ": missing types directive");

  Matrix weights(weight_rows.size(), types.size());
  for (std::size_t e = 0; e < weight_rows.size(); ++e)
    for (std::size_t t = 0; t < types.size(); ++t)
      weights(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(t)) =
          weight_rows[e][t];
  return MultiGraph(std::move(nodes), std::move(types), std::move(endpoints),
                    std::move(weights));
}

void save_multigraph(const MultiGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "types:";
  for (const auto& t : g.edge_types()) out << " " << t;
  out << "\n";
  std::vector<bool> has_edge(g.node_count(), false);
  for (const auto& [u, v] : g.endpoints()) has_edge[u] = has_edge[v] = true;
  for (int i = 0; i < g.node_count(); ++i)
    if (!has_edge[i]) out << "node: " << g.nodes()[i] << "\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.endpoints()[e];
    out << g.nodes()[u] << "\t" << g.nodes()[v];
    for (int t = 0; t < g.type_count(); ++t)
      out << "\t" << format_double(g.weights()(e, t));
    out << "\n";
  }
  if (!out) throw IoError("failed writing " + path.string());
}

Graph load_graph(const std::filesystem::path& path) {
  const MultiGraph mg = load_multigraph(path);
  if (mg.type_count() != 1)
    throw InvalidInput(path.filename().string() +
                       ": expected a single edge type, found " +
                       std::to_string(mg.type_count()));
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(mg.edge_count()));
  for (int e = 0; e < mg.edge_count(); ++e) {
    const auto [u, v] = mg.endpoints()[e];
    edges.push_back({u, v, mg.weights()(e, 0)});
  }
  return Graph(mg.nodes(), std::move(edges));
}

void save_graph(const Graph& g, const std::filesystem::path& path,
                const std::string& type_name) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "types: " << type_name << "\n";
  std::vector<bool> has_edge(g.node_count(), false);
  for (const auto& e : g.edges()) has_edge[e.u] = has_edge[e.v] = true;
  for (int i = 0; i < g.node_count(); ++i)
    if (!has_edge[i]) out << "node: " << g.nodes()[i] << "\n";
  for (const auto& e : g.edges())
    out << g.nodes()[e.u] << "\t" << g.nodes()[e.v] << "\t" << format_double(e.w)
        << "\n";
  if (!out) throw IoError("failed writing " + path.string());
}

Clustering load_clustering(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  const std::string where = path.filename().string();
  std::vector<std::string> nodes;
  std::vector<int> labels;
  std::unordered_map<std::string, int> label_ids;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = split_ws(line);
    if (fields.size() != 2)
      throw InvalidInput(where + ":" + std::to_string(line_no) +
                         ": expected node<TAB>label");
    nodes.push_back(fields[0]);
    const auto [it, inserted] =
        label_ids.emplace(fields[1], static_cast<int>(label_ids.size()));
    labels.push_back(it->second);
    (void)inserted;
  }
  if (nodes.empty()) throw InvalidInput(where + ": empty clustering file");
  return Clustering(std::move(nodes), labels);
}

void save_clustering(const Clustering& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  for (int i = 0; i < c.node_count(); ++i)
    out << c.nodes()[i] << "\t" << c.labels()[i] << "\n";
  if (!out) throw IoError("failed writing " + path.string());
}

void save_vi_matrix_csv(const Matrix& m, const std::vector<std::string>& ids,
                        const std::filesystem::path& path) {
  if (m.rows() != m.cols() ||
      m.rows() != static_cast<Eigen::Index>(ids.size()))
    throw InvalidInput("vi matrix and identifier list disagree");
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "id";
  for (const auto& id : ids) out << "," << id;
  out << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << ids[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out << "," << format_double(m(i, j));
    out << "\n";
  }
  if (!out) throw IoError("failed writing " + path.string());
}

void save_ensemble(const Ensemble& e, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string());

  int width = 1;
  for (int v = e.size() - 1; v >= 10; v /= 10) ++width;
  auto entry_name = [&](int i) {
    std::string digits = std::to_string(i);
    return "clustering_" + std::string(width - digits.size(), '0') + digits +
           ".tsv";
  };

  json manifest;
  manifest["node_count"] = e.node_universe.size();
  manifest["seed"] = e.seed;
  // Negative composites are truncated at zero throughout the sampling.
  manifest["aggregation"] = "linear-clamped";
  manifest["entries"] = json::array();
  for (int i = 0; i < e.size(); ++i) {
    json entry;
    entry["file"] = entry_name(i);
    entry["alpha"] = std::vector<double>(
        e.alphas[i].data(), e.alphas[i].data() + e.alphas[i].size());
    entry["warning"] = e.warnings[i];
    manifest["entries"].push_back(std::move(entry));
    save_clustering(e.clusterings[i], dir / entry_name(i));
  }
  std::ofstream out(dir / "manifest.json");
  if (!out) throw IoError("cannot write ensemble manifest");
  out << manifest.dump(2) << "\n";
}

Ensemble load_ensemble(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw IoError("cannot open " + (dir / "manifest.json").string());
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& ex) {
    throw InvalidInput("bad ensemble manifest: " + std::string(ex.what()));
  }
  Ensemble e;
  e.seed = manifest.value("seed", 0ULL);
  for (const auto& entry : manifest.at("entries")) {
    const std::vector<double> a = entry.at("alpha").get<std::vector<double>>();
    Vector alpha(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
      alpha[static_cast<Eigen::Index>(i)] = a[i];
    e.alphas.push_back(std::move(alpha));
    e.warnings.push_back(entry.value("warning", ""));
    e.clusterings.push_back(
        load_clustering(dir / entry.at("file").get<std::string>()));
  }
  if (e.clusterings.empty()) throw InvalidInput("empty ensemble directory");
  e.node_universe = e.clusterings.front().nodes();
  for (const Clustering& c : e.clusterings)
    if (!c.same_node_set(e.clusterings.front()))
      throw InvalidInput("ensemble entries cover different node sets");
  return e;
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(hex);
}

}  // namespace mgc
