#pragma once

#include "graphent/errors.hpp"
#include "graphent/graph.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

namespace graphent {

/// Result of averaging a signal over `steps`-walks.
///
/// `row_sums[i]` is the number (total weight) of walks of the given length
/// leaving i. Where it is zero, which can only happen on directed graphs,
/// `values[i]` is set to 0 and the row is not usable for embedding.
template <typename Scalar>
struct WalkAverage {
  Signal<Scalar> values;
  Signal<Scalar> row_sums;

  bool valid(Eigen::Index i) const { return row_sums[i] != Scalar(0); }
};

namespace detail {

template <typename Scalar>
decltype(auto) adjacency_as(const Graph& g) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return (g.adjacency());
  } else {
    return Eigen::SparseMatrix<Scalar, Eigen::RowMajor, VertexId>(
        g.adjacency().template cast<Scalar>());
  }
}

template <typename Scalar>
void normalize_walk(WalkAverage<Scalar>& out, const Graph& g) {
  for (Eigen::Index i = 0; i < out.values.size(); ++i) {
    if (out.row_sums[i] != Scalar(0)) {
      out.values[i] /= out.row_sums[i];
    } else {
      if (!g.is_directed())
        throw NumericError("zero walk count at vertex " + std::to_string(i) + " of undirected graph");
      out.values[i] = Scalar(0);
    }
  }
  if (!out.values.allFinite() || !out.row_sums.allFinite())
    throw NumericError("walk counts overflowed; reduce the number of steps");
}

}  // namespace detail

/// D A^steps x with D_ii = 1 / sum_j (A^steps)_ij, computed by `steps`
/// sparse products on x and on the all-ones vector. Weighted graphs use W.
template <typename Derived>
WalkAverage<typename Derived::Scalar> walk_propagate(const Graph& g,
                                                     const Eigen::MatrixBase<Derived>& x,
                                                     int steps) {
  using Scalar = typename Derived::Scalar;
  if (x.size() != g.size())
    throw InputError("signal length " + std::to_string(x.size()) + " does not match " +
                     std::to_string(g.size()) + " vertices");
  if (steps < 0) throw InputError("walk length must be non-negative");

  decltype(auto) a = detail::adjacency_as<Scalar>(g);
  WalkAverage<Scalar> out{x, Signal<Scalar>::Ones(g.size())};
  for (int s = 0; s < steps; ++s) {
    out.values = a * out.values;
    out.row_sums = a * out.row_sums;
  }
  detail::normalize_walk(out, g);
  return out;
}

/// Rows of the embedding matrix restricted to the vertices whose walk
/// counts are nonzero at every lag (all vertices for undirected graphs).
struct EmbeddingMatrix {
  /// |rows| x m; column k is the k*L-walk average of the signal.
  Eigen::MatrixXd columns;
  std::vector<VertexId> rows;
};

/// Builds y_k = D A^{kL} x for k = 0..m-1, restricted to the valid rows.
/// Throws InputError("no valid embedding rows") when nothing survives.
EmbeddingMatrix embedding_matrix(const Graph& g, const GraphSignal& x, int m, int delay);

/// Vertices i with sum_j (A^{kL})_ij != 0 for every k = 0..m-1.
std::vector<VertexId> restriction_set(const Graph& g, int m, int delay);

/// Deg - A for an undirected graph (weighted degrees when weighted).
Eigen::SparseMatrix<double> combinatorial_laplacian(const Graph& g);

/// Random-walk normalised Laplacian applied to x: x - Deg^{-1} A x.
template <typename Derived>
Signal<typename Derived::Scalar> normalized_laplacian_apply(const Graph& g,
                                                            const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (g.is_directed()) throw InputError("normalised Laplacian requires an undirected graph");
  if (x.size() != g.size()) throw InputError("signal length does not match vertex count");
  decltype(auto) a = detail::adjacency_as<Scalar>(g);
  Signal<Scalar> deg = g.degrees().template cast<Scalar>();
  Signal<Scalar> avg = (a * x).cwiseQuotient(deg);
  return x - avg;
}

}  // namespace graphent
