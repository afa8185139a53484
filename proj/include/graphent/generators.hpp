#pragma once

#include "graphent/graph.hpp"
#include "graphent/rng.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace graphent {

/// A random geometric graph together with the points that produced it.
struct GeometricGraph {
  Graph graph;
  Eigen::MatrixXd coords;  ///< n x d, each row in [0, 1]^d
  double radius = 0.0;
  int dim = 0;
};

struct RggOptions {
  /// Fresh point sets drawn before giving up on an isolated vertex.
  int max_attempts = 100;
};

/// All pairs u < v with Euclidean distance strictly below r, sorted.
/// Buckets points in a grid of cells at least r wide; falls back to the
/// all-pairs scan when the neighbourhood stencil (3^d) exceeds n.
std::vector<std::pair<VertexId, VertexId>> geometric_edges(const Eigen::MatrixXd& coords, double r);

GeometricGraph rgg(int n, int d, double r, Rng& rng, const RggOptions& options = {});

/// Ring lattice with k neighbours on each side, each lattice edge (u, u+j)
/// rewired with probability p to (u, w) for a uniformly chosen w that is
/// neither u nor already adjacent to u. Always has exactly n*k edges.
Graph watts_strogatz(int n, int k, double p, Rng& rng);

Graph path(int n);
Graph cycle(int n);
Graph directed_path(int n);
/// Vertex 0 joined to 1..n-1.
Graph star(int n);

/// (1 - R_i) S_i + R_i W_i with R_i ~ Bernoulli(p), W_i ~ U[-sqrt 3, sqrt 3]
/// and S_i = sum_j sin(f x_i^j). R_i and W_i are drawn for every vertex so
/// the noise sequence does not depend on p.
GraphSignal mix_signal(const GeometricGraph& gg, double p, double f, Rng& rng);

/// sin(2 pi f i / n), i.e. f full periods over the vertex order.
GraphSignal sine_signal(int n, double f);
/// Cumulative sum of standard normal increments starting from 0.
GraphSignal wiener_signal(int n, Rng& rng);
/// x_{t+1} = r x_t (1 - x_t) started at x0, after discarding burn_in steps.
GraphSignal logistic_signal(int n, double r, double x0 = 0.4, int burn_in = 1000);
/// I.i.d. uniform on [0, 1).
GraphSignal uniform_signal(int n, Rng& rng);

}  // namespace graphent
