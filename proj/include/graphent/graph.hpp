#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace graphent {

using VertexId = std::int32_t;

template <typename Scalar>
using Signal = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Real values indexed by vertex id.
using GraphSignal = Signal<double>;

/// Row-major so that row i holds the out-neighbours of vertex i.
using Adjacency = Eigen::SparseMatrix<double, Eigen::RowMajor, VertexId>;

enum class Directedness { undirected, directed };

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on vertices 0..n-1.
///
/// Construction enforces: endpoints in range, no self-loops, no duplicate
/// edges, strictly positive finite weights and, for undirected graphs, no
/// isolated vertices. Undirected edges are stored once with u < v; the edge
/// list is kept sorted so two graphs with the same edge set compare equal.
class Graph {
 public:
  Graph(VertexId n, std::vector<Edge> edges,
        Directedness directedness = Directedness::undirected);

  VertexId size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool is_directed() const { return directedness_ == Directedness::directed; }
  Directedness directedness() const { return directedness_; }
  /// True when some edge carries a weight other than 1.
  bool is_weighted() const { return weighted_; }

  std::span<const Edge> edges() const { return edges_; }
  const Adjacency& adjacency() const { return adjacency_; }

  /// Out-neighbours of v (all neighbours when undirected), ascending.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::span<const double> neighbor_weights(VertexId v) const;

  /// Weighted out-degree of every vertex.
  Eigen::VectorXd degrees() const;

  /// The same graph with vertex v renamed to perm[v].
  Graph permuted(std::span<const VertexId> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directedness_ == b.directedness_ && a.edges_ == b.edges_;
  }

 private:
  VertexId n_;
  Directedness directedness_;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  Adjacency adjacency_;
};

}  // namespace graphent
