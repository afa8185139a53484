#include "graphent/errors.hpp"
#include "graphent/generators.hpp"
#include "graphent/graph_spec.hpp"
#include "graphent/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

using namespace graphent;

namespace {

std::vector<std::pair<VertexId, VertexId>> brute_force_edges(const Eigen::MatrixXd& pts, double r) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (Eigen::Index u = 0; u < pts.rows(); ++u)
    for (Eigen::Index v = u + 1; v < pts.rows(); ++v)
      if ((pts.row(u) - pts.row(v)).norm() < r) out.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return out;
}

Eigen::MatrixXd random_points(Rng& rng, int n, int d) {
  Eigen::MatrixXd pts(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) pts(i, j) = rng.uniform();
  return pts;
}

}  // namespace

TEST_CASE("rng draws are reproducible and well behaved") {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.normal() == b.normal());

  Rng r(5);
  double sum = 0.0, sq = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double z = r.normal();
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / kDraws) < 0.01);
  CHECK(std::abs(sq / kDraws - 1.0) < 0.02);

  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) ++hits[r.below(7)];
  for (int h : hits) CHECK(std::abs(h - 10000) < 500);

  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(derive_seed(1, "graph", 0) == derive_seed(1, "graph", 0));
  CHECK(derive_seed(1, "graph", 0) != derive_seed(1, "graph", 1));
  CHECK(derive_seed(1, "graph", 0) != derive_seed(1, "signal", 0));
  CHECK(derive_seed(1, "graph", 0) != derive_seed(2, "graph", 0));
}

TEST_CASE("geometric edges match the quadratic scan") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 3;
    const int n = 20 + 5 * trial;
    const double r = 0.03 + 0.01 * (trial % 15);
    Eigen::MatrixXd pts = random_points(rng, n, d);
    CHECK(geometric_edges(pts, r) == brute_force_edges(pts, r));
  }
  // Points exactly r apart are not joined.
  Eigen::MatrixXd pair(2, 1);
  pair << 0.25, 0.75;
  CHECK(geometric_edges(pair, 0.5).empty());
  CHECK(geometric_edges(pair, 0.5000001).size() == 1);
}

TEST_CASE("rgg") {
  SUBCASE("a radius beyond the cube diagonal gives the complete graph") {
    Rng rng(1);
    auto gg = rgg(30, 2, 1.5, rng);
    CHECK(gg.graph.edge_count() == 30 * 29 / 2);
    CHECK(gg.coords.rows() == 30);
    CHECK(gg.coords.cols() == 2);
  }
  SUBCASE("same seed, same graph") {
    Rng a(8), b(8);
    auto g1 = rgg(400, 2, 0.1, a);
    auto g2 = rgg(400, 2, 0.1, b);
    CHECK(g1.graph == g2.graph);
    CHECK(g1.coords == g2.coords);
  }
  SUBCASE("mean degree follows the disc area") {
    constexpr int n = 1500;
    constexpr double r = 0.06;
    const double expected = n * std::numbers::pi * r * r;
    double total = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s) {
      Rng rng(derive_seed(77, "graph", s));
      auto gg = rgg(n, 2, r, rng);
      total += 2.0 * static_cast<double>(gg.graph.edge_count()) / n;
      CHECK(gg.graph.degrees().minCoeff() >= 1.0);
    }
    const double mean = total / 20.0;
    CHECK(mean > 0.75 * expected);
    CHECK(mean < 1.25 * expected);
  }
  SUBCASE("hopelessly sparse settings give up") {
    Rng rng(3);
    CHECK_THROWS_AS(rgg(200, 2, 0.001, rng, {5}), InputError);
  }
  Rng rng(4);
  CHECK_THROWS_AS(rgg(1, 2, 0.1, rng), InputError);
  CHECK_THROWS_AS(rgg(10, 0, 0.1, rng), InputError);
  CHECK_THROWS_AS(rgg(10, 2, -0.1, rng), InputError);
}

TEST_CASE("watts-strogatz") {
  Rng rng(12);
  SUBCASE("k = 1 without rewiring is the cycle") { CHECK(watts_strogatz(9, 1, 0.0, rng) == cycle(9)); }
  SUBCASE("lattice degrees") {
    Graph g = watts_strogatz(6, 2, 0.0, rng);
    CHECK(g.edge_count() == 12);
    CHECK((g.degrees().array() == 4.0).all());
    Graph h = watts_strogatz(50, 3, 0.0, rng);
    CHECK((h.degrees().array() == 6.0).all());
  }
  SUBCASE("rewiring keeps the edge count and leaves no vertex isolated") {
    for (double p : {0.05, 0.3, 1.0}) {
      for (int trial = 0; trial < 10; ++trial) {
        Graph g = watts_strogatz(100, 3, p, rng);
        CHECK(g.edge_count() == 300);
        CHECK(g.degrees().minCoeff() >= 1.0);
      }
    }
  }
  SUBCASE("rewiring changes edges at roughly the requested rate") {
    Graph lattice = watts_strogatz(1000, 2, 0.0, rng);
    std::set<std::pair<VertexId, VertexId>> base;
    for (const Edge& e : lattice.edges()) base.insert({e.u, e.v});
    Graph g = watts_strogatz(1000, 2, 0.2, rng);
    int moved = 0;
    for (const Edge& e : g.edges()) moved += base.count({e.u, e.v}) == 0;
    CHECK(std::abs(moved / 2000.0 - 0.2) < 0.04);
  }
  CHECK_THROWS_AS(watts_strogatz(6, 3, 0.1, rng), InputError);  // 2k must stay below n
  CHECK_THROWS_AS(watts_strogatz(6, 0, 0.1, rng), InputError);
  CHECK_THROWS_AS(watts_strogatz(6, 1, 1.5, rng), InputError);
}

TEST_CASE("fixed graphs") {
  CHECK(path(4) == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(cycle(4) == Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  Graph dp = directed_path(4);
  CHECK(dp.is_directed());
  const std::vector<Edge> arcs{{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}};
  CHECK(std::equal(dp.edges().begin(), dp.edges().end(), arcs.begin(), arcs.end()));
  Graph s = star(5);
  CHECK(s.degrees()[0] == 4.0);
  CHECK(s.edge_count() == 4);
  CHECK_THROWS_AS(cycle(2), InputError);
  CHECK_THROWS_AS(path(1), InputError);
}

TEST_CASE("mix signal") {
  Rng rng(21);
  auto gg = rgg(500, 2, 0.1, rng);
  const double f = 2.0 * std::numbers::pi;
  GraphSignal s(gg.coords.rows());
  for (Eigen::Index i = 0; i < s.size(); ++i) s[i] = std::sin(f * gg.coords(i, 0)) + std::sin(f * gg.coords(i, 1));

  Rng r0(5);
  CHECK((mix_signal(gg, 0.0, f, r0) - s).lpNorm<Eigen::Infinity>() <= 1e-15);

  Rng r1(5);
  GraphSignal w = mix_signal(gg, 1.0, f, r1);
  CHECK(w.cwiseAbs().maxCoeff() <= std::sqrt(3.0));
  const double var = (w.array() - w.mean()).square().mean();
  CHECK(std::abs(var - 1.0) < 0.2);

  SUBCASE("one-dimensional embedding") {
    GeometricGraph line{Graph(2, {{0, 1}}), Eigen::MatrixXd(2, 1), 1.0, 1};
    line.coords << 0.25, 0.75;
    Rng r(1);
    GraphSignal x = mix_signal(line, 0.0, f, r);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x[1] == doctest::Approx(-1.0).epsilon(1e-15));
  }
  SUBCASE("the noisy fraction follows p") {
    constexpr int n = 10000;
    GeometricGraph big{cycle(n), Eigen::MatrixXd::Zero(n, 1), 0.0, 1};
    Rng r(9);
    GraphSignal x = mix_signal(big, 0.3, f, r);  // S = 0, so noise shows up as nonzero entries
    const double rate = static_cast<double>((x.array() != 0.0).count()) / n;
    CHECK(std::abs(rate - 0.3) < 3.0 * std::sqrt(0.3 * 0.7 / n));
  }
  SUBCASE("noise draws do not depend on p") {
    Rng a(33), b(33);
    GraphSignal x = mix_signal(gg, 0.4, f, a);
    GraphSignal y = mix_signal(gg, 0.6, f, b);
    int agree = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i) agree += x[i] != s[i] && y[i] == x[i];
    CHECK(agree > 0);
  }
  Rng bad(1);
  CHECK_THROWS_AS(mix_signal(gg, -0.1, f, bad), InputError);
}

TEST_CASE("time-indexed signals") {
  GraphSignal s = sine_signal(400, 1.0);
  CHECK(s[100] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(s[0]) == 0.0);

  Rng a(4), b(4);
  GraphSignal w = wiener_signal(200, a);
  CHECK(w[0] == 0.0);
  for (int i = 1; i < 200; ++i) CHECK(w[i] - w[i - 1] == doctest::Approx(b.normal()).epsilon(1e-9));

  GraphSignal lg = logistic_signal(100, 3.3);
  // period-2 orbit of r = 3.3: (r + 1 +- sqrt((r + 1)(r - 3))) / 2r
  const double hi = (4.3 + std::sqrt(4.3 * 0.3)) / 6.6;
  const double lo = (4.3 - std::sqrt(4.3 * 0.3)) / 6.6;
  for (int i = 0; i + 1 < 100; ++i) {
    CHECK(lg[i] == doctest::Approx(lg[i + 2 < 100 ? i + 2 : i]).epsilon(1e-9));
    CHECK((std::abs(lg[i] - hi) < 1e-9 || std::abs(lg[i] - lo) < 1e-9));
  }
  GraphSignal chaotic = logistic_signal(500, 3.9);
  CHECK(chaotic.minCoeff() > 0.0);
  CHECK(chaotic.maxCoeff() < 1.0);

  Rng u(6);
  GraphSignal uni = uniform_signal(1000, u);
  CHECK(uni.minCoeff() >= 0.0);
  CHECK(uni.maxCoeff() < 1.0);
  CHECK(std::abs(uni.mean() - 0.5) < 0.05);
}

TEST_CASE("graph specs") {
  auto spec = parse_graph_spec("rgg:n=200,d=2,r=0.15");
  CHECK(spec.model == "rgg");
  CHECK(spec.get_int("n") == 200);
  CHECK(spec.get("r") == 0.15);
  auto a = generate_graph(spec, 5);
  auto b = generate_graph(spec, 5);
  REQUIRE(a.geometric.has_value());
  CHECK(a.graph == b.graph);
  Rng direct(derive_seed(5, "graph", 0));
  CHECK(rgg(200, 2, 0.15, direct).graph == a.graph);

  CHECK(generate_graph(parse_graph_spec("cycle:n=7"), 0).graph == cycle(7));
  CHECK(generate_graph(parse_graph_spec("directed-path:n=7"), 0).graph == directed_path(7));
  CHECK(generate_graph(parse_graph_spec("ws:n=30,k=2,p=0"), 0).graph.edge_count() == 60);
  CHECK_THROWS_AS(generate_graph(parse_graph_spec("rgg"), 0), InputError);
  CHECK_THROWS_AS(parse_graph_spec("rgg:n"), InputError);
  CHECK_THROWS_AS(generate_graph(parse_graph_spec("blob:n=3"), 0), InputError);
  CHECK_THROWS_AS(generate_graph(parse_graph_spec("cycle:m=3"), 0), InputError);
  CHECK_THROWS_AS(generate_graph(parse_graph_spec("cycle:n=3.5"), 0), InputError);
}
