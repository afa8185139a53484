#include "graphent/graph.hpp"

#include "graphent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace graphent {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph(VertexId n, std::vector<Edge> edges, Directedness directedness)
    : n_(n), directedness_(directedness), edges_(std::move(edges)) {
  if (n_ < 1) throw InputError("graph must have at least one vertex");

  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw InputError("edge " + edge_text(e) + " has an endpoint outside 0.." +
                       std::to_string(n_ - 1));
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!std::isfinite(e.w) || e.w <= 0.0)
      throw InputError("edge " + edge_text(e) + " has non-positive weight");
    if (directedness_ == Directedness::undirected && e.u > e.v) std::swap(e.u, e.v);
    if (e.w != 1.0) weighted_ = true;
  }

  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  });
  if (dup != edges_.end()) throw InputError("duplicate edge " + edge_text(*dup));

  std::vector<Eigen::Triplet<double, VertexId>> triplets;
  triplets.reserve(edges_.size() * (is_directed() ? 1 : 2));
  for (const Edge& e : edges_) {
    triplets.emplace_back(e.u, e.v, e.w);
    if (!is_directed()) triplets.emplace_back(e.v, e.u, e.w);
  }
  adjacency_.resize(n_, n_);
  adjacency_.setFromTriplets(triplets.begin(), triplets.end());
  adjacency_.makeCompressed();

  if (!is_directed()) {
    for (VertexId v = 0; v < n_; ++v) {
      if (neighbors(v).empty())
        throw InputError("vertex " + std::to_string(v) +
                         " is isolated; undirected graphs must not contain isolated vertices");
    }
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  const VertexId* outer = adjacency_.outerIndexPtr();
  return {adjacency_.innerIndexPtr() + outer[v],
          static_cast<std::size_t>(outer[v + 1] - outer[v])};
}

std::span<const double> Graph::neighbor_weights(VertexId v) const {
  const VertexId* outer = adjacency_.outerIndexPtr();
  return {adjacency_.valuePtr() + outer[v], static_cast<std::size_t>(outer[v + 1] - outer[v])};
}

Eigen::VectorXd Graph::degrees() const {
  Eigen::VectorXd deg(n_);
  for (VertexId v = 0; v < n_; ++v) {
    double s = 0.0;
    for (double w : neighbor_weights(v)) s += w;
    deg[v] = s;
  }
  return deg;
}

Graph Graph::permuted(std::span<const VertexId> perm) const {
  if (static_cast<VertexId>(perm.size()) != n_)
    throw InputError("permutation length does not match vertex count");
  std::vector<bool> seen(n_, false);
  for (VertexId p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw InputError("not a permutation of the vertex ids");
    seen[p] = true;
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({perm[e.u], perm[e.v], e.w});
  return Graph(n_, std::move(out), directedness_);
}

}  // namespace graphent
