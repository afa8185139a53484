#include "graphent/generators.hpp"

#include "graphent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace graphent {

namespace {

constexpr std::uint64_t kMaxCellKey = std::uint64_t{1} << 62;

std::vector<std::pair<VertexId, VertexId>> all_pairs_edges(const Eigen::MatrixXd& coords, double r) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  const double r2 = r * r;
  const auto n = static_cast<VertexId>(coords.rows());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if ((coords.row(u) - coords.row(v)).squaredNorm() < r2) edges.emplace_back(u, v);
  return edges;
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> geometric_edges(const Eigen::MatrixXd& coords, double r) {
  const auto n = static_cast<VertexId>(coords.rows());
  const auto d = static_cast<int>(coords.cols());
  if (!(r > 0.0)) throw InputError("radius must be positive");

  // Cells per axis, each at least r wide.
  const auto cells = static_cast<std::uint64_t>(
      std::clamp(std::floor(1.0 / r), 1.0, static_cast<double>(std::max<VertexId>(n, 1))));
  double stencil = std::pow(3.0, d);
  double key_space = std::pow(static_cast<double>(cells), d);
  if (cells < 3 || stencil > static_cast<double>(n) || key_space >= static_cast<double>(kMaxCellKey))
    return all_pairs_edges(coords, r);

  std::vector<std::uint64_t> cell_of(static_cast<std::size_t>(n) * d);
  auto axis_cell = [&](VertexId v, int j) {
    auto c = static_cast<std::uint64_t>(coords(v, j) * static_cast<double>(cells));
    return std::min(c, cells - 1);
  };
  std::vector<std::pair<std::uint64_t, VertexId>> keyed(n);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t key = 0;
    for (int j = d - 1; j >= 0; --j) {
      cell_of[static_cast<std::size_t>(v) * d + j] = axis_cell(v, j);
      key = key * cells + axis_cell(v, j);
    }
    keyed[v] = {key, v};
  }
  std::sort(keyed.begin(), keyed.end());

  const double r2 = r * r;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<int> offset(d);
  for (VertexId u = 0; u < n; ++u) {
    std::fill(offset.begin(), offset.end(), -1);
    while (true) {
      bool inside = true;
      std::uint64_t key = 0;
      for (int j = d - 1; j >= 0; --j) {
        auto c = static_cast<std::int64_t>(cell_of[static_cast<std::size_t>(u) * d + j]) + offset[j];
        if (c < 0 || c >= static_cast<std::int64_t>(cells)) {
          inside = false;
          break;
        }
        key = key * cells + static_cast<std::uint64_t>(c);
      }
      if (inside) {
        auto lo = std::lower_bound(keyed.begin(), keyed.end(), std::pair<std::uint64_t, VertexId>{key, 0});
        for (auto it = lo; it != keyed.end() && it->first == key; ++it) {
          VertexId v = it->second;
          if (v > u && (coords.row(u) - coords.row(v)).squaredNorm() < r2) edges.emplace_back(u, v);
        }
      }
      int j = 0;
      while (j < d && offset[j] == 1) offset[j++] = -1;
      if (j == d) break;
      ++offset[j];
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

GeometricGraph rgg(int n, int d, double r, Rng& rng, const RggOptions& options) {
  if (n < 2) throw InputError("random geometric graph needs n >= 2");
  if (d < 1) throw InputError("dimension d must be at least 1");
  if (!(r > 0.0)) throw InputError("radius r must be positive");
  if (options.max_attempts < 1) throw InputError("max_attempts must be at least 1");

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    Eigen::MatrixXd coords(n, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) coords(i, j) = rng.uniform();

    auto pairs = geometric_edges(coords, r);
    std::vector<int> degree(n, 0);
    for (auto [u, v] : pairs) {
      ++degree[u];
      ++degree[v];
    }
    if (std::find(degree.begin(), degree.end(), 0) != degree.end()) continue;

    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
    return GeometricGraph{Graph(n, std::move(edges)), std::move(coords), r, d};
  }
  throw InputError("random geometric graph (n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                   ") still had an isolated vertex after " + std::to_string(options.max_attempts) +
                   " attempts; increase n or r");
}

Graph watts_strogatz(int n, int k, double p, Rng& rng) {
  if (n < 3) throw InputError("Watts-Strogatz needs n >= 3");
  if (k < 1 || 2 * k > n - 1) throw InputError("Watts-Strogatz needs 1 <= k <= (n-1)/2");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("rewiring probability must lie in [0, 1]");

  std::vector<std::set<VertexId>> adj(n);
  for (VertexId u = 0; u < n; ++u)
    for (int j = 1; j <= k; ++j) {
      VertexId v = (u + j) % n;
      adj[u].insert(v);
      adj[v].insert(u);
    }

  for (int j = 1; j <= k; ++j) {
    for (VertexId u = 0; u < n; ++u) {
      VertexId v = (u + j) % n;
      if (!rng.bernoulli(p)) continue;
      if (static_cast<int>(adj[u].size()) >= n - 1) continue;
      VertexId w;
      do {
        w = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
      } while (w == u || adj[u].count(w));
      adj[u].erase(v);
      adj[v].erase(u);
      adj[u].insert(w);
      adj[w].insert(u);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * k);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : adj[u])
      if (u < v) edges.push_back({u, v, 1.0});
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  if (n < 2) throw InputError("path needs n >= 2");
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, std::move(edges));
}

Graph directed_path(int n) {
  if (n < 2) throw InputError("directed path needs n >= 2");
  std::vector<Edge> arcs;
  for (VertexId i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1, 1.0});
  return Graph(n, std::move(arcs), Directedness::directed);
}

Graph star(int n) {
  if (n < 2) throw InputError("star needs n >= 2");
  std::vector<Edge> edges;
  for (VertexId i = 1; i < n; ++i) edges.push_back({0, i, 1.0});
  return Graph(n, std::move(edges));
}

GraphSignal mix_signal(const GeometricGraph& gg, double p, double f, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("noise probability must lie in [0, 1]");
  const double half_width = std::sqrt(3.0);
  const auto n = gg.coords.rows();
  GraphSignal x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const bool noisy = rng.bernoulli(p);
    const double noise = rng.uniform(-half_width, half_width);
    double s = 0.0;
    for (Eigen::Index j = 0; j < gg.coords.cols(); ++j) s += std::sin(f * gg.coords(i, j));
    x[i] = noisy ? noise : s;
  }
  return x;
}

GraphSignal sine_signal(int n, double f) {
  if (n < 1) throw InputError("signal length must be positive");
  GraphSignal x(n);
  for (int i = 0; i < n; ++i) x[i] = std::sin(2.0 * std::numbers::pi * f * i / n);
  return x;
}

GraphSignal wiener_signal(int n, Rng& rng) {
  if (n < 1) throw InputError("signal length must be positive");
  GraphSignal x(n);
  x[0] = 0.0;
  for (int i = 1; i < n; ++i) x[i] = x[i - 1] + rng.normal();
  return x;
}

GraphSignal logistic_signal(int n, double r, double x0, int burn_in) {
  if (n < 1) throw InputError("signal length must be positive");
  if (!(r > 0.0 && r <= 4.0)) throw InputError("logistic parameter r must lie in (0, 4]");
  if (!(x0 > 0.0 && x0 < 1.0)) throw InputError("logistic start x0 must lie in (0, 1)");
  if (burn_in < 0) throw InputError("burn-in must be non-negative");
  double v = x0;
  for (int t = 0; t < burn_in; ++t) v = r * v * (1.0 - v);
  GraphSignal x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = v;
    v = r * v * (1.0 - v);
  }
  return x;
}

GraphSignal uniform_signal(int n, Rng& rng) {
  if (n < 1) throw InputError("signal length must be positive");
  GraphSignal x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.uniform();
  return x;
}

}  // namespace graphent
