#include "graphent/walk.hpp"

namespace graphent {

namespace {

void check_embedding_params(int m, int delay) {
  if (m < 2) throw InputError("embedding dimension m must be at least 2");
  if (delay < 1) throw InputError("delay L must be at least 1");
}

// Advances numerator/denominator pairs lag by lag so that column k costs
// L products on top of column k-1 instead of k*L from scratch.
template <typename Visit>
void for_each_lag(const Graph& g, const GraphSignal& x, int m, int delay, Visit&& visit) {
  const Adjacency& a = g.adjacency();
  GraphSignal num = x;
  GraphSignal den = GraphSignal::Ones(g.size());
  visit(0, num, den);
  for (int k = 1; k < m; ++k) {
    for (int s = 0; s < delay; ++s) {
      num = a * num;
      den = a * den;
    }
    if (!num.allFinite() || !den.allFinite())
      throw NumericError("walk counts overflowed; reduce m or L");
    visit(k, num, den);
  }
}

}  // namespace

std::vector<VertexId> restriction_set(const Graph& g, int m, int delay) {
  check_embedding_params(m, delay);
  std::vector<bool> keep(g.size(), true);
  const GraphSignal zero = GraphSignal::Zero(g.size());
  for_each_lag(g, zero, m, delay, [&](int, const GraphSignal&, const GraphSignal& den) {
    for (VertexId i = 0; i < g.size(); ++i)
      if (den[i] == 0.0) keep[i] = false;
  });
  std::vector<VertexId> rows;
  for (VertexId i = 0; i < g.size(); ++i)
    if (keep[i]) rows.push_back(i);
  if (rows.empty()) throw InputError("no valid embedding rows");
  return rows;
}

EmbeddingMatrix embedding_matrix(const Graph& g, const GraphSignal& x, int m, int delay) {
  check_embedding_params(m, delay);
  if (x.size() != g.size()) throw InputError("signal length does not match vertex count");

  Eigen::MatrixXd full(g.size(), m);
  std::vector<bool> keep(g.size(), true);
  for_each_lag(g, x, m, delay, [&](int k, const GraphSignal& num, const GraphSignal& den) {
    for (VertexId i = 0; i < g.size(); ++i) {
      if (den[i] == 0.0) {
        if (!g.is_directed())
          throw NumericError("zero walk count at vertex " + std::to_string(i) +
                             " of undirected graph");
        keep[i] = false;
        full(i, k) = 0.0;
      } else {
        full(i, k) = num[i] / den[i];
      }
    }
  });

  EmbeddingMatrix out;
  for (VertexId i = 0; i < g.size(); ++i)
    if (keep[i]) out.rows.push_back(i);
  if (out.rows.empty()) throw InputError("no valid embedding rows");
  out.columns = full(out.rows, Eigen::all);
  return out;
}

Eigen::SparseMatrix<double> combinatorial_laplacian(const Graph& g) {
  if (g.is_directed()) throw InputError("combinatorial Laplacian requires an undirected graph");
  Eigen::SparseMatrix<double> lap = -Eigen::SparseMatrix<double>(g.adjacency());
  Eigen::VectorXd deg = g.degrees();
  for (VertexId i = 0; i < g.size(); ++i) lap.coeffRef(i, i) += deg[i];
  lap.makeCompressed();
  return lap;
}

}  // namespace graphent
