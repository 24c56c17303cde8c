#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mgc/community.hpp"
#include "mgc/metaclustering.hpp"
#include "mgc/multigraph.hpp"

namespace mgc {

// Multigraph edge-list file (UTF-8). Canonical form written by the savers:
//   types: name1 name2 ... namek
//   node: id                  (one per isolated node)
//   u<TAB>v<TAB>w1<TAB>...<TAB>wk
// '#' starts a comment; a comment whose body begins with "types:" is also
// accepted as the directive. Parsing splits on any whitespace run.
MultiGraph load_multigraph(const std::filesystem::path& path);
void save_multigraph(const MultiGraph& g, const std::filesystem::path& path);

// Single-weight graphs reuse the same format with k = 1.
Graph load_graph(const std::filesystem::path& path);
void save_graph(const Graph& g, const std::filesystem::path& path,
                const std::string& type_name = "composite");

// Clustering file: node<TAB>label, one node per line. Labels may be any
// token; they are canonicalized on load.
Clustering load_clustering(const std::filesystem::path& path);
void save_clustering(const Clustering& c, const std::filesystem::path& path);

// CSV with clustering identifiers as header row and first column.
void save_vi_matrix_csv(const Matrix& m, const std::vector<std::string>& ids,
                        const std::filesystem::path& path);

// Ensemble directory: manifest.json (alphas, warnings, entry file names) plus
// one clustering file per entry.
void save_ensemble(const Ensemble& e, const std::filesystem::path& dir);
Ensemble load_ensemble(const std::filesystem::path& dir);

// Shortest round-trip decimal text for a double.
std::string format_double(double v);

// FNV-1a content hash of a file, as 16 hex digits.
std::string file_digest(const std::filesystem::path& path);

}  // namespace mgc
