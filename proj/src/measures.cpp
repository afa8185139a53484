#include "graphent/measures.hpp"

#include "graphent/walk.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace graphent {

Spectrum laplacian_spectrum(const Graph& g, const SpectrumOptions& options) {
  if (g.is_directed()) throw InputError("Laplacian spectrum requires an undirected graph");
  if (g.size() > options.max_vertices)
    throw InputError("dense eigendecomposition limited to " + std::to_string(options.max_vertices) +
                     " vertices (graph has " + std::to_string(g.size()) +
                     "); use a smaller graph or raise the limit");

  const Eigen::MatrixXd lap = Eigen::MatrixXd(combinatorial_laplacian(g));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw NumericError("Laplacian eigendecomposition failed");

  Eigen::VectorXd values = solver.eigenvalues();
  Eigen::MatrixXd vectors = solver.eigenvectors();
  const Eigen::Index n = values.size();

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index r = 0; r < n; ++r) {
      if (std::abs(vectors(r, i)) > 1e-12) {
        if (vectors(r, i) < 0) vectors.col(i) = -vectors.col(i);
        break;
      }
    }
  }

  auto rounded_less = [&](Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const double x = std::round(vectors(r, a) * 1e9);
      const double y = std::round(vectors(r, b) * 1e9);
      if (x != y) return x < y;
    }
    return a < b;
  };

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const double tie = 1e-9 * std::max(1.0, values[n - 1]);
  for (Eigen::Index lo = 0; lo < n;) {
    Eigen::Index hi = lo + 1;
    while (hi < n && values[hi] - values[hi - 1] <= tie) ++hi;
    std::sort(order.begin() + lo, order.begin() + hi, rounded_less);
    // Members of a tied group share one value so the output stays sorted.
    const double shared = values.segment(lo, hi - lo).mean();
    values.segment(lo, hi - lo).setConstant(shared);
    lo = hi;
  }

  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    s.eigenvalues[i] = values[order[i]];
    s.eigenvectors.col(i) = vectors.col(order[i]);
  }
  return s;
}

double normalized_smoothness(const Spectrum& s, Eigen::Index i) {
  if (i < 0 || i >= s.size()) throw InputError("eigenvector index out of range");
  const double top = s.eigenvalues[s.size() - 1];
  if (!(top > 0.0)) throw InputError("largest eigenvalue is zero; smoothness cannot be normalised");
  return std::clamp(s.eigenvalues[i] / top, 0.0, 1.0);
}

std::string_view to_string(Centrality kind) {
  switch (kind) {
    case Centrality::eigenvector: return "eigenvector";
    case Centrality::betweenness: return "betweenness";
    case Centrality::closeness: return "closeness";
    case Centrality::harmonic: return "harmonic";
    case Centrality::degree: return "degree";
    case Centrality::pagerank: return "pagerank";
  }
  return "?";
}

Centrality centrality_from_string(std::string_view name) {
  for (Centrality kind : kAllCentralities)
    if (to_string(kind) == name) return kind;
  throw InputError("unknown centrality `" + std::string(name) + "`");
}

GraphSignal centrality(const Graph& g, Centrality kind) {
  switch (kind) {
    case Centrality::eigenvector: return eigenvector_centrality(g);
    case Centrality::betweenness: return betweenness_centrality(g);
    case Centrality::closeness: return closeness_centrality(g);
    case Centrality::harmonic: return harmonic_centrality(g);
    case Centrality::degree: return degree_centrality(g);
    case Centrality::pagerank: return pagerank(g);
  }
  throw InputError("unknown centrality");
}

namespace {

void require_undirected(const Graph& g, std::string_view what) {
  if (g.is_directed()) throw InputError(std::string(what) + " requires an undirected graph");
}

// Hop distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  std::vector<int> dist(g.size(), -1);
  std::queue<VertexId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

GraphSignal degree_centrality(const Graph& g) { return g.degrees(); }

GraphSignal eigenvector_centrality(const Graph& g, double tol, int max_iter) {
  require_undirected(g, "eigenvector centrality");
  const Adjacency& a = g.adjacency();
  GraphSignal x = GraphSignal::Constant(g.size(), 1.0 / std::sqrt(static_cast<double>(g.size())));
  for (int it = 0; it < max_iter; ++it) {
    GraphSignal next = a * x + x;
    next /= next.norm();
    const double change = (next - x).lpNorm<Eigen::Infinity>();
    x = std::move(next);
    if (change < tol) return x.cwiseAbs();
  }
  throw NumericError("eigenvector centrality did not converge in " + std::to_string(max_iter) +
                     " iterations");
}

GraphSignal pagerank(const Graph& g, double damping, double tol, int max_iter) {
  require_undirected(g, "pagerank");
  const VertexId n = g.size();
  const Eigen::VectorXd deg = g.degrees();
  GraphSignal rank = GraphSignal::Constant(n, 1.0 / n);
  for (int it = 0; it < max_iter; ++it) {
    GraphSignal next = GraphSignal::Constant(n, (1.0 - damping) / n);
    for (VertexId u = 0; u < n; ++u) {
      const double share = damping * rank[u] / deg[u];
      auto nbrs = g.neighbors(u);
      auto wts = g.neighbor_weights(u);
      for (std::size_t k = 0; k < nbrs.size(); ++k) next[nbrs[k]] += share * wts[k];
    }
    const double residual = (next - rank).lpNorm<1>();
    rank = std::move(next);
    if (residual < tol) return rank;
  }
  throw NumericError("pagerank did not converge in " + std::to_string(max_iter) + " iterations");
}

GraphSignal closeness_centrality(const Graph& g) {
  require_undirected(g, "closeness centrality");
  const VertexId n = g.size();
  GraphSignal out(n);
  for (VertexId u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    double total = 0.0;
    for (int d : dist) {
      if (d < 0) throw InputError("closeness centrality requires a connected graph");
      total += d;
    }
    out[u] = (n - 1) / total;
  }
  return out;
}

GraphSignal harmonic_centrality(const Graph& g) {
  require_undirected(g, "harmonic centrality");
  GraphSignal out(g.size());
  for (VertexId u = 0; u < g.size(); ++u) {
    const auto dist = bfs_distances(g, u);
    double total = 0.0;
    for (int d : dist)
      if (d > 0) total += 1.0 / d;
    out[u] = total;
  }
  return out;
}

GraphSignal betweenness_centrality(const Graph& g) {
  require_undirected(g, "betweenness centrality");
  const VertexId n = g.size();
  GraphSignal score = GraphSignal::Zero(n);

  std::vector<double> sigma(n), delta(n);
  std::vector<int> dist(n);
  std::vector<VertexId> order;
  order.reserve(n);
  for (VertexId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();

    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<VertexId> queue;
    queue.push(s);
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop();
      order.push_back(u);
      for (VertexId v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push(v);
        }
        if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
      }
    }

    // Predecessors of w are the neighbours one hop closer to s.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      VertexId w = *it;
      for (VertexId v : g.neighbors(w))
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) score[w] += delta[w];
    }
  }

  // Each unordered pair was counted from both ends.
  const double pairs = 0.5 * (n - 1.0) * (n - 2.0);
  if (pairs <= 0.0) return GraphSignal::Zero(n);
  return score / (2.0 * pairs);
}

}  // namespace graphent
