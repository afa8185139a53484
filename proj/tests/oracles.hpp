#pragma once

// Test-only reference implementations. They share no code path with the
// library: dense matrix powers, a pattern table keyed by class vectors and
// explicit shortest-path enumeration.

#include "graphent/graph.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

inline Eigen::MatrixXd dense_adjacency(const graphent::Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.size(), g.size());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.w;
    if (!g.is_directed()) a(e.v, e.u) = e.w;
  }
  return a;
}

inline Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& a, int k) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  for (int i = 0; i < k; ++i) p = p * a;
  return p;
}

/// D A^k x with D from the row sums of A^k, dense.
inline Eigen::VectorXd walk_average(const graphent::Graph& g, const Eigen::VectorXd& x, int k) {
  Eigen::MatrixXd p = matrix_power(dense_adjacency(g), k);
  Eigen::VectorXd sums = p.rowwise().sum();
  return (p * x).cwiseQuotient(sums);
}

inline int ncdf_class(double v, double mu, double sigma, int c) {
  double phi = 0.5 * (1.0 + std::erf((v - mu) / (sigma * std::sqrt(2.0))));
  double t = c * phi + 0.5;
  int k = static_cast<int>(std::floor(t + 0.5));  // t > 0, so this is half away from zero
  return std::min(std::max(k, 1), c);
}

inline double entropy_of(const std::vector<std::vector<int>>& rows, int m, int c) {
  std::map<std::vector<int>, int> table;
  for (const auto& r : rows) ++table[r];
  double h = 0.0;
  for (const auto& [pattern, count] : table) {
    double p = static_cast<double>(count) / rows.size();
    h -= p * std::log(p);
  }
  return h / std::log(std::pow(static_cast<double>(c), m));
}

struct Stats {
  double mu, sigma;
};

inline Stats population_stats(const Eigen::VectorXd& x) {
  double mu = x.mean();
  double sigma = std::sqrt((x.array() - mu).square().mean());
  return {mu, sigma};
}

/// Dispersion entropy with explicit A^{kL}, restricted to rows whose walk
/// counts never vanish. Assumes a non-constant signal.
inline double dense_deg(const graphent::Graph& g, const Eigen::VectorXd& x, int m, int L, int c) {
  const Eigen::MatrixXd a = dense_adjacency(g);
  const Stats s = population_stats(x);
  const int n = g.size();
  std::vector<Eigen::VectorXd> cols;
  std::vector<bool> keep(n, true);
  for (int k = 0; k < m; ++k) {
    Eigen::MatrixXd p = matrix_power(a, k * L);
    Eigen::VectorXd sums = p.rowwise().sum();
    Eigen::VectorXd num = p * x;
    Eigen::VectorXd col(n);
    for (int i = 0; i < n; ++i) {
      if (sums[i] == 0.0) {
        keep[i] = false;
        col[i] = 0.0;
      } else {
        col[i] = num[i] / sums[i];
      }
    }
    cols.push_back(col);
  }
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    std::vector<int> r;
    for (int k = 0; k < m; ++k) r.push_back(ncdf_class(cols[k][i], s.mu, s.sigma, c));
    rows.push_back(r);
  }
  return entropy_of(rows, m, c);
}

/// Classical dispersion entropy straight from the textbook recipe.
inline double dense_classical_de(const Eigen::VectorXd& x, int m, int L, int c) {
  const Stats s = population_stats(x);
  std::vector<int> z(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) z[i] = ncdf_class(x[i], s.mu, s.sigma, c);
  std::vector<std::vector<int>> rows;
  for (Eigen::Index i = 0; i + (m - 1) * L < x.size(); ++i) {
    std::vector<int> r;
    for (int k = 0; k < m; ++k) r.push_back(z[i + k * L]);
    rows.push_back(r);
  }
  return entropy_of(rows, m, c);
}

/// Betweenness by enumerating every shortest path between each pair.
inline Eigen::VectorXd enumerated_betweenness(const graphent::Graph& g) {
  const int n = g.size();
  // All-pairs hop distances by Floyd-Warshall.
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

  Eigen::VectorXd score = Eigen::VectorXd::Zero(n);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (d[s][t] >= inf) continue;
      std::vector<int> through(n, 0);
      long total = 0;
      std::vector<int> path{s};
      // Depth-first over neighbours that stay on a shortest path.
      auto dfs = [&](auto&& self, int u) -> void {
        if (u == t) {
          ++total;
          for (std::size_t i = 1; i + 1 < path.size(); ++i) ++through[path[i]];
          return;
        }
        for (auto v : g.neighbors(u)) {
          if (d[s][v] == d[s][u] + 1 && d[v][t] == d[u][t] - 1) {
            path.push_back(v);
            self(self, v);
            path.pop_back();
          }
        }
      };
      dfs(dfs, s);
      for (int v = 0; v < n; ++v) score[v] += static_cast<double>(through[v]) / total;
    }
  }
  const double pairs = 0.5 * (n - 1.0) * (n - 2.0);
  return pairs > 0 ? Eigen::VectorXd(score / pairs) : Eigen::VectorXd(score);
}

/// Random simple undirected graph with no isolated vertex.
inline graphent::Graph random_graph(std::mt19937_64& gen, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (true) {
    std::vector<graphent::Edge> edges;
    std::vector<int> deg(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(gen)) {
          edges.push_back({u, v, 1.0});
          ++deg[u];
          ++deg[v];
        }
    if (std::find(deg.begin(), deg.end(), 0) == deg.end()) return graphent::Graph(n, edges);
  }
}

inline graphent::Graph random_digraph(std::mt19937_64& gen, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<graphent::Edge> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(gen)) arcs.push_back({u, v, 1.0});
  return graphent::Graph(n, arcs, graphent::Directedness::directed);
}

inline Eigen::VectorXd random_signal(std::mt19937_64& gen, int n) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = normal(gen);
  return x;
}

}  // namespace oracle
