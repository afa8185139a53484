#pragma once

#include "graphent/graph.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace graphent {

struct EdgeListOptions {
  Directedness directedness = Directedness::undirected;
  /// When false a third column is accepted but every weight is taken as 1.
  bool use_weights = true;
};

struct LoadedGraph {
  Graph graph;
  /// labels[id] is the token that named vertex id in the file.
  std::vector<std::string> labels;
  /// Repeated edges (including v u after u v when undirected) that were
  /// folded into one because their weights agreed.
  std::size_t merged_duplicates = 0;
};

/// Edge list: one `u v [w]` per line, whitespace separated, `#` starts a
/// comment line, blank lines ignored. When every label is a non-negative
/// integer, ids follow numeric order (so 0..n-1 files keep their ids);
/// otherwise ids follow first appearance.
LoadedGraph parse_edge_list(std::istream& in, const EdgeListOptions& options = {});
LoadedGraph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options = {});

/// Signal: one decimal number per line, line i is vertex i. `#` comments
/// and blank lines are skipped.
GraphSignal parse_signal(std::istream& in);
GraphSignal load_signal(const std::filesystem::path& path);
/// As above, and checks the length against `g`.
GraphSignal load_signal(const std::filesystem::path& path, const Graph& g);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);
/// Fixed-point text with `digits` decimals, independent of the C locale.
std::string format_fixed(double value, int digits);

void write_edge_list(std::ostream& out, const Graph& g);
void write_signal(std::ostream& out, const GraphSignal& x);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace graphent
