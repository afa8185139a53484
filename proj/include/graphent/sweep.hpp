#pragma once

#include "graphent/entropy.hpp"
#include "graphent/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphent {

enum class Experiment {
  mix_noise,
  mix_frequency,
  rgg_radius,
  smallworld_p,
  smallworld_k,
  spectrum,
  centrality,
};

std::string_view to_string(Experiment e);
Experiment experiment_from_string(std::string_view name);
const std::vector<Experiment>& all_experiments();

enum class GraphModel { rgg, watts_strogatz, cycle, path, file };
enum class SignalProcess { mix, sine, wiener, logistic, uniform };

std::string_view to_string(GraphModel m);
std::string_view to_string(SignalProcess p);

/// Declarative sweep. Every list is a grid axis; the run covers the
/// cartesian product of the axes that the chosen model and processes use.
struct SweepConfig {
  Experiment experiment = Experiment::mix_noise;

  struct GraphSpec {
    GraphModel model = GraphModel::rgg;
    std::vector<int> n;
    std::vector<int> d;          // rgg
    std::vector<double> r;       // rgg
    std::vector<int> k;          // watts-strogatz
    std::vector<double> p;       // watts-strogatz rewiring probability
    std::string path;            // file
    bool directed = false;       // file
  } graph;

  struct SignalSpec {
    std::vector<SignalProcess> process;
    std::vector<double> f;           // mix: rad per unit; sine: periods per vertex order
    std::vector<double> p;           // mix noise probability
    std::vector<double> r_logistic;  // logistic
    double logistic_x0 = 0.4;
    int logistic_burn_in = 1000;
  } signal;

  struct EntropyGrid {
    std::vector<int> m;
    std::vector<int> L;
    std::vector<int> c;
  } entropy;

  int realizations = 1;
  std::uint64_t master_seed = 0;
  std::string output;

  /// Throws InputError on empty grids, unusable combinations or bad ranges.
  void validate() const;
};

/// Parses the JSON document. Fields the experiment uses are mandatory;
/// unknown fields are rejected.
SweepConfig parse_sweep_config(std::string_view json_text);
SweepConfig load_sweep_config(const std::string& path);
std::string to_json(const SweepConfig& config);
/// Desk-scale configuration for each experiment.
SweepConfig default_config(Experiment e);

struct SweepRow {
  std::string experiment;
  int realization = 0;
  int n = 0;
  std::optional<int> d;
  std::optional<double> r;
  std::optional<int> k;
  std::optional<double> rewire_p;
  std::string process;  // signal process, "eigenvector" or a centrality name
  std::optional<double> f;
  std::optional<double> noise_p;
  std::optional<double> r_logistic;
  std::optional<int> index;  // spectrum: 1-based eigenvector index
  std::optional<double> lambda;
  std::optional<double> smoothness;
  int m = 0;
  int L = 0;
  int c = 0;
  std::optional<double> entropy;
  std::optional<std::size_t> support;
  std::optional<std::size_t> rows;
  std::string error;
  double wall_ms = 0.0;

  /// Identifies the grid point: every parameter except the realization.
  std::string grid_key() const;
};

struct SummaryRow {
  std::string grid_key;
  std::size_t count = 0;   ///< realizations without error
  std::size_t errors = 0;
  double mean = 0.0;
  double stddev = 0.0;     ///< sample standard deviation, 0 for one value
};

struct SweepOptions {
  unsigned threads = 0;  ///< 0 picks std::thread::hardware_concurrency()
  bool timing = false;   ///< add the wall_ms column to the CSV
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SummaryRow> summary;
};

SweepResult run_sweep(const SweepConfig& config, const SweepOptions& options = {});

std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows);

/// Fixed column order with a header row; numbers use the shortest
/// round-trip decimal form and `.` as separator.
std::string sweep_csv(const std::vector<SweepRow>& rows, bool timing = false);
std::string summary_table(const std::vector<SummaryRow>& summary);

}  // namespace graphent
