#include "graphent/errors.hpp"
#include "graphent/sweep.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <string>

using namespace graphent;

namespace {

SweepConfig small_mix_noise() {
  SweepConfig cfg = default_config(Experiment::mix_noise);
  cfg.graph.n = {150};
  cfg.graph.r = {0.15};
  cfg.realizations = 3;
  return cfg;
}

}  // namespace

TEST_CASE("every experiment has a valid default") {
  for (Experiment e : all_experiments()) {
    CAPTURE(to_string(e));
    SweepConfig cfg = default_config(e);
    CHECK_NOTHROW(cfg.validate());
    CHECK(experiment_from_string(to_string(e)) == e);
    SweepConfig back = parse_sweep_config(to_json(cfg));
    CHECK(to_json(back) == to_json(cfg));
  }
  CHECK_THROWS_AS(experiment_from_string("nope"), InputError);
}

TEST_CASE("default noise sweep shape") {
  SweepResult res = run_sweep(default_config(Experiment::mix_noise), {1, false});
  CHECK(res.rows.size() == 110);
  CHECK(res.summary.size() == 11);
  for (const SweepRow& row : res.rows) {
    REQUIRE(row.entropy.has_value());
    CHECK(*row.entropy >= 0.0);
    CHECK(*row.entropy <= 1.0);
    CHECK(row.error.empty());
    CHECK(row.rows == std::size_t{500});
  }
}

TEST_CASE("reruns are byte-identical regardless of thread count") {
  SweepConfig cfg = small_mix_noise();
  const std::string one = sweep_csv(run_sweep(cfg, {1, false}).rows);
  const std::string again = sweep_csv(run_sweep(cfg, {1, false}).rows);
  const std::string many = sweep_csv(run_sweep(cfg, {4, false}).rows);
  CHECK(one == again);
  CHECK(one == many);

  SweepConfig other = cfg;
  other.master_seed += 1;
  CHECK(sweep_csv(run_sweep(other, {1, false}).rows) != one);

  SweepConfig sw = default_config(Experiment::smallworld_p);
  sw.graph.n = {120};
  sw.realizations = 2;
  CHECK(sweep_csv(run_sweep(sw, {1, false}).rows) == sweep_csv(run_sweep(sw, {3, false}).rows));
}

TEST_CASE("summary statistics agree with the rows") {
  SweepResult res = run_sweep(small_mix_noise(), {1, false});
  std::map<std::string, std::vector<double>> groups;
  for (const SweepRow& row : res.rows) groups[row.grid_key()].push_back(*row.entropy);
  REQUIRE(res.summary.size() == groups.size());
  for (const SummaryRow& s : res.summary) {
    const auto& v = groups.at(s.grid_key);
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    CHECK(s.count == v.size());
    CHECK(std::abs(s.mean - mean) < 1e-12);
    CHECK(std::abs(s.stddev - std::sqrt(ss / static_cast<double>(v.size() - 1))) < 1e-12);
  }
  CHECK(summary_table(res.summary).find("mean") != std::string::npos);
}

TEST_CASE("csv layout") {
  SweepConfig cfg = small_mix_noise();
  cfg.realizations = 1;
  cfg.signal.p = {0.0};
  SweepResult res = run_sweep(cfg, {1, false});
  const std::string csv = sweep_csv(res.rows);
  const std::string header =
      "experiment,realization,n,d,r,k,rewire_p,process,f,noise_p,r_logistic,index,lambda,"
      "smoothness,m,L,c,entropy,support,rows,error\n";
  REQUIRE(csv.substr(0, header.size()) == header);
  const std::string line = csv.substr(header.size());
  CHECK(line.rfind("mix-noise,0,150,2,0.15,,,mix,6.283185307179586,0,,,,,3,1,3,", 0) == 0);
  CHECK(sweep_csv(res.rows, true).find(",error,wall_ms\n") != std::string::npos);
}

TEST_CASE("spectrum and centrality experiments") {
  SweepConfig spec = default_config(Experiment::spectrum);
  spec.graph.n = {60};
  spec.graph.r = {0.3};
  SweepResult s = run_sweep(spec, {1, false});
  CHECK(s.rows.size() == 60 * 3);
  for (const SweepRow& row : s.rows) {
    REQUIRE(row.index.has_value());
    CHECK(*row.index >= 1);
    CHECK(row.smoothness.has_value());
  }

  SweepConfig cent = default_config(Experiment::centrality);
  cent.graph.n = {100};
  cent.realizations = 2;
  SweepResult c = run_sweep(cent, {1, false});
  CHECK(c.rows.size() == 6 * 2);
  CHECK(c.rows[0].process == "eigenvector");
}

TEST_CASE("failures become error rows") {
  SweepConfig cfg = default_config(Experiment::rgg_radius);
  cfg.graph.n = {40};
  cfg.graph.r = {0.01, 0.5};
  cfg.entropy.c = {3};
  cfg.realizations = 2;
  SweepResult res = run_sweep(cfg, {1, false});
  int failed = 0;
  for (const SweepRow& row : res.rows) {
    if (*row.r == 0.01) {
      CHECK_FALSE(row.entropy.has_value());
      CHECK_FALSE(row.error.empty());
      ++failed;
    } else {
      CHECK(row.entropy.has_value());
    }
  }
  CHECK(failed == 2);
  for (const SummaryRow& s : res.summary)
    if (s.count == 0) CHECK(s.errors == 2);
}

TEST_CASE("config parsing") {
  const std::string good = R"({
    "experiment": "smallworld-k",
    "graph": {"model": "watts-strogatz", "n": [100], "k": [1, 2], "p": [0.1]},
    "signal": {"process": ["sine"], "f": [10]},
    "entropy": {"m": [3], "L": [1], "c": [3]},
    "realizations": 2,
    "master_seed": 5,
    "output": "x.csv"
  })";
  SweepConfig cfg = parse_sweep_config(good);
  CHECK(cfg.graph.k == std::vector<int>{1, 2});
  CHECK(cfg.master_seed == 5);
  CHECK(run_sweep(cfg, {1, false}).rows.size() == 4);

  auto without = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(parse_sweep_config(without(R"("k": [1, 2], )", "")), InputError);
  CHECK_THROWS_AS(parse_sweep_config(without(R"("realizations": 2,)", R"("realizations": 2, "extra": 1,)")), InputError);
  CHECK_THROWS_AS(parse_sweep_config(without(R"("m": [3])", R"("m": [1])")), InputError);
  CHECK_THROWS_AS(parse_sweep_config(without(R"("realizations": 2)", R"("realizations": 0)")), InputError);
  CHECK_THROWS_AS(parse_sweep_config(without(R"("sine")", R"("brownian")")), InputError);
  CHECK_THROWS_AS(parse_sweep_config(without(R"("k": [1, 2])", R"("k": [1, "2"])")), InputError);
  CHECK_THROWS_AS(parse_sweep_config("{ not json"), InputError);
  CHECK_THROWS_AS(load_sweep_config("/nonexistent/config.json"), InputError);
}
