#pragma once

#include "graphent/generators.hpp"
#include "graphent/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace graphent {

/// Generator description such as `rgg:n=500,d=2,r=0.08`, `ws:n=500,k=3,p=0.1`,
/// `cycle:n=64`, `path:n=10`, `directed-path:n=10` or `star:n=5`.
struct GraphSpec {
  std::string model;
  std::map<std::string, double, std::less<>> params;

  double get(std::string_view key) const;
  int get_int(std::string_view key) const;
};

GraphSpec parse_graph_spec(std::string_view text);

struct GeneratedGraph {
  Graph graph;
  std::optional<GeometricGraph> geometric;
};

/// Builds the graph, seeding random models from derive_seed(seed, "graph", 0)
/// so that the result matches realization 0 of a sweep with the same master seed.
GeneratedGraph generate_graph(const GraphSpec& spec, std::uint64_t seed);

}  // namespace graphent
