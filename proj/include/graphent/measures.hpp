#pragma once

#include "graphent/errors.hpp"
#include "graphent/graph.hpp"

#include <Eigen/Core>

#include <array>
#include <string_view>

namespace graphent {

/// x^T Delta x evaluated edgewise: sum over edges of w (x_u - x_v)^2.
template <typename Derived>
typename Derived::Scalar smoothness(const Graph& g, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (g.is_directed()) throw InputError("smoothness requires an undirected graph");
  if (x.size() != g.size()) throw InputError("signal length does not match vertex count");
  Scalar acc(0);
  for (const Edge& e : g.edges()) {
    const Scalar diff = x[e.u] - x[e.v];
    acc += Scalar(e.w) * diff * diff;
  }
  return acc;
}

/// Laplacian eigenpairs, eigenvalues ascending, eigenvectors as unit columns.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  Eigen::Index size() const { return eigenvalues.size(); }
};

struct SpectrumOptions {
  VertexId max_vertices = 4000;
};

/// Dense eigendecomposition of the combinatorial Laplacian.
///
/// Each eigenvector's sign is fixed so its first entry with magnitude above
/// 1e-12 is positive. Vectors of a numerically repeated eigenvalue are
/// ordered by lexicographic comparison of their coordinates rounded to
/// 1e-9 and report the group's mean eigenvalue. The basis inside such a
/// space is still whatever the solver chose.
Spectrum laplacian_spectrum(const Graph& g, const SpectrumOptions& options = {});

/// lambda_i / lambda_max for the 0-based index i.
double normalized_smoothness(const Spectrum& s, Eigen::Index i);

enum class Centrality { eigenvector, betweenness, closeness, harmonic, degree, pagerank };

inline constexpr std::array<Centrality, 6> kAllCentralities = {
    Centrality::eigenvector, Centrality::betweenness, Centrality::closeness,
    Centrality::harmonic,    Centrality::degree,      Centrality::pagerank};

std::string_view to_string(Centrality kind);
Centrality centrality_from_string(std::string_view name);

GraphSignal centrality(const Graph& g, Centrality kind);

GraphSignal degree_centrality(const Graph& g);
/// Unit-norm, entrywise non-negative Perron vector of A by power iteration
/// on A + I (the shift keeps bipartite graphs from oscillating).
GraphSignal eigenvector_centrality(const Graph& g, double tol = 1e-10, int max_iter = 100000);
GraphSignal pagerank(const Graph& g, double damping = 0.85, double tol = 1e-12, int max_iter = 100000);
/// Hop-count distances; throws InputError on a disconnected graph.
GraphSignal closeness_centrality(const Graph& g);
/// Hop-count distances; unreachable pairs contribute 0.
GraphSignal harmonic_centrality(const Graph& g);
/// Brandes accumulation over hop-count shortest paths, divided by
/// (n-1)(n-2)/2. Edge weights are ignored.
GraphSignal betweenness_centrality(const Graph& g);

}  // namespace graphent
