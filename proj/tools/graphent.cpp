// graphent: dispersion entropy of graph signals from the command line.
//
// Exit codes: 0 success, 2 usage or input error, 3 numeric failure.

#include "graphent/entropy.hpp"
#include "graphent/errors.hpp"
#include "graphent/generators.hpp"
#include "graphent/graph_spec.hpp"
#include "graphent/io.hpp"
#include "graphent/measures.hpp"
#include "graphent/rng.hpp"
#include "graphent/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace graphent;

constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

struct EntropyFlags {
  int m = 3;
  int L = 1;
  int c = 3;
  bool per_column = false;

  EntropyParams params() const {
    EntropyParams p{m, L, c};
    p.per_column_stats = per_column;
    p.validate();
    return p;
  }
};

void add_entropy_flags(CLI::App* cmd, EntropyFlags& f) {
  cmd->add_option("-m", f.m, "embedding dimension")->capture_default_str();
  cmd->add_option("-L", f.L, "delay")->capture_default_str();
  cmd->add_option("-c", f.c, "number of classes")->capture_default_str();
  cmd->add_flag("--per-column-stats", f.per_column,
                "map each embedding column with its own mean and standard deviation");
}

struct GraphSource {
  std::string file;
  std::string spec;
  std::uint64_t seed = 0;
  bool directed = false;
  bool weighted = false;
};

void add_graph_source(CLI::App* cmd, GraphSource& s, bool allow_directed) {
  auto* file = cmd->add_option("-g,--graph", s.file, "edge list file");
  auto* spec = cmd->add_option("--gen", s.spec, "generator spec, e.g. rgg:n=300,d=2,r=0.1");
  file->excludes(spec);
  cmd->add_option("--seed", s.seed, "seed for generated graphs")->capture_default_str();
  if (allow_directed) cmd->add_flag("--directed", s.directed, "read the edge list as arcs u -> v");
  cmd->add_flag("--weighted", s.weighted, "use the third edge-list column as weights");
}

Graph load_graph(const GraphSource& s) {
  if (!s.spec.empty()) return generate_graph(parse_graph_spec(s.spec), s.seed).graph;
  if (s.file.empty()) throw InputError("give a graph with --graph FILE or --gen SPEC");
  EdgeListOptions options;
  options.directedness = s.directed ? Directedness::directed : Directedness::undirected;
  options.use_weights = s.weighted;
  return load_edge_list(s.file, options).graph;
}

void print_result(const EntropyResult& r) {
  std::cout << "entropy " << format_fixed(r.value, 12) << '\n'
            << "rows " << r.restriction_size << '\n'
            << "support " << r.histogram.support() << '\n';
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_file_atomic(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dispersion entropy for graph signals"};
  app.require_subcommand(1);

  // entropy
  GraphSource entropy_graph;
  std::string entropy_signal;
  EntropyFlags entropy_flags;
  auto* entropy_cmd = app.add_subcommand("entropy", "dispersion entropy of a signal on a graph");
  add_graph_source(entropy_cmd, entropy_graph, true);
  entropy_cmd->add_option("-s,--signal", entropy_signal, "signal file")->required();
  add_entropy_flags(entropy_cmd, entropy_flags);

  // de
  std::string de_signal;
  EntropyFlags de_flags;
  auto* de_cmd = app.add_subcommand("de", "classical dispersion entropy of a time series");
  de_cmd->add_option("-s,--signal", de_signal, "series file")->required();
  add_entropy_flags(de_cmd, de_flags);

  // gen graph / gen signal
  auto* gen_cmd = app.add_subcommand("gen", "generate graphs and signals");
  gen_cmd->require_subcommand(1);
  std::string gen_graph_spec, gen_out, gen_coords;
  std::uint64_t gen_seed = 0;
  auto* gen_graph = gen_cmd->add_subcommand("graph", "write a generated edge list");
  gen_graph->add_option("spec", gen_graph_spec, "e.g. rgg:n=500,d=2,r=0.08 or ws:n=500,k=1,p=0.1")->required();
  gen_graph->add_option("--seed", gen_seed, "master seed")->capture_default_str();
  gen_graph->add_option("--out", gen_out, "edge list path (stdout when omitted)");
  gen_graph->add_option("--coords", gen_coords, "write rgg coordinates, one point per line");

  std::string sig_process, sig_rgg, sig_out, sig_graph_out;
  int sig_n = 0, sig_burn_in = 1000;
  double sig_f = 10.0, sig_p = 0.0, sig_r = 3.7, sig_x0 = 0.4;
  std::uint64_t sig_seed = 0;
  auto* gen_signal = gen_cmd->add_subcommand("signal", "write a generated signal");
  gen_signal->add_option("process", sig_process, "mix, sine, wiener, logistic or uniform")
      ->required()
      ->check(CLI::IsMember({"mix", "sine", "wiener", "logistic", "uniform"}));
  gen_signal->add_option("--n", sig_n, "signal length (not used by mix)");
  gen_signal->add_option("--rgg", sig_rgg, "mix: rgg spec, e.g. rgg:n=500,d=2,r=0.08");
  gen_signal->add_option("--graph-out", sig_graph_out, "mix: also write the rgg edge list");
  gen_signal->add_option("-f,--f", sig_f, "mix: rad per unit; sine: periods over the vertex order")
      ->capture_default_str();
  gen_signal->add_option("-p,--p", sig_p, "mix: noise probability")->capture_default_str();
  gen_signal->add_option("-r,--r", sig_r, "logistic: growth rate")->capture_default_str();
  gen_signal->add_option("--x0", sig_x0, "logistic: start value")->capture_default_str();
  gen_signal->add_option("--burn-in", sig_burn_in, "logistic: discarded steps")->capture_default_str();
  gen_signal->add_option("--seed", sig_seed, "master seed")->capture_default_str();
  gen_signal->add_option("--out", sig_out, "signal path (stdout when omitted)");

  // sweep
  std::string sweep_config, sweep_out, sweep_default;
  std::optional<std::uint64_t> sweep_seed;
  unsigned sweep_threads = 0;
  bool sweep_timing = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a seeded parameter sweep and write CSV");
  auto* cfg_opt = sweep_cmd->add_option("config", sweep_config, "JSON sweep configuration");
  auto* def_opt = sweep_cmd->add_option("--print-default-config", sweep_default,
                                        "print the default configuration of an experiment");
  cfg_opt->excludes(def_opt);
  sweep_cmd->add_option("--out", sweep_out, "override the output path");
  sweep_cmd->add_option("--seed", sweep_seed, "override the master seed");
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads (0 = all cores)");
  sweep_cmd->add_flag("--timing", sweep_timing, "add a wall_ms column (breaks byte-identical reruns)");

  // spectrum
  GraphSource spec_graph;
  std::vector<int> spec_m{2}, spec_c{2, 3, 4};
  int spec_L = 1;
  std::string spec_out;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian eigenvectors as signals");
  add_graph_source(spectrum_cmd, spec_graph, false);
  spectrum_cmd->add_option("-m", spec_m, "embedding dimensions")->delimiter(',')->capture_default_str();
  spectrum_cmd->add_option("-c", spec_c, "class counts")->delimiter(',')->capture_default_str();
  spectrum_cmd->add_option("-L", spec_L, "delay")->capture_default_str();
  spectrum_cmd->add_option("--out", spec_out, "CSV path (stdout when omitted)");

  // centrality
  GraphSource cent_graph;
  EntropyFlags cent_flags;
  std::string cent_out;
  auto* centrality_cmd = app.add_subcommand("centrality", "entropy of six centrality measures");
  add_graph_source(centrality_cmd, cent_graph, false);
  add_entropy_flags(centrality_cmd, cent_flags);
  centrality_cmd->add_option("--out", cent_out, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*entropy_cmd) {
      const Graph g = load_graph(entropy_graph);
      const GraphSignal x = load_signal(entropy_signal, g);
      print_result(dispersion_entropy_graph(g, x, entropy_flags.params()));
    } else if (*de_cmd) {
      const GraphSignal x = load_signal(de_signal);
      print_result(classical_de(x, de_flags.params()));
    } else if (*gen_graph) {
      GeneratedGraph gg = generate_graph(parse_graph_spec(gen_graph_spec), gen_seed);
      std::ostringstream text;
      write_edge_list(text, gg.graph);
      emit(text.str(), gen_out);
      if (!gen_coords.empty()) {
        if (!gg.geometric) throw InputError("--coords needs an rgg spec");
        std::ostringstream pts;
        const auto& xy = gg.geometric->coords;
        for (Eigen::Index i = 0; i < xy.rows(); ++i) {
          for (Eigen::Index j = 0; j < xy.cols(); ++j) pts << (j ? " " : "") << format_double(xy(i, j));
          pts << '\n';
        }
        write_file_atomic(gen_coords, pts.str());
      }
    } else if (*gen_signal) {
      Rng rng(derive_seed(sig_seed, "signal", 0));
      GraphSignal x;
      if (sig_process == "mix") {
        if (sig_rgg.empty()) throw InputError("mix needs --rgg SPEC");
        GraphSpec spec = parse_graph_spec(sig_rgg);
        if (spec.model != "rgg") throw InputError("mix needs an rgg spec");
        GeneratedGraph gg = generate_graph(spec, sig_seed);
        x = mix_signal(*gg.geometric, sig_p, sig_f, rng);
        if (!sig_graph_out.empty()) {
          std::ostringstream text;
          write_edge_list(text, gg.graph);
          write_file_atomic(sig_graph_out, text.str());
        }
      } else {
        if (sig_n < 1) throw InputError(sig_process + " needs --n >= 1");
        if (sig_process == "sine") x = sine_signal(sig_n, sig_f);
        if (sig_process == "wiener") x = wiener_signal(sig_n, rng);
        if (sig_process == "logistic") x = logistic_signal(sig_n, sig_r, sig_x0, sig_burn_in);
        if (sig_process == "uniform") x = uniform_signal(sig_n, rng);
      }
      std::ostringstream text;
      write_signal(text, x);
      emit(text.str(), sig_out);
    } else if (*sweep_cmd) {
      if (!sweep_default.empty()) {
        std::cout << to_json(default_config(experiment_from_string(sweep_default)));
        return 0;
      }
      if (sweep_config.empty()) throw InputError("sweep needs a config file or --print-default-config");
      SweepConfig config = load_sweep_config(sweep_config);
      if (!sweep_out.empty()) config.output = sweep_out;
      if (sweep_seed) config.master_seed = *sweep_seed;
      SweepOptions options;
      options.threads = sweep_threads;
      options.timing = sweep_timing;
      SweepResult result = run_sweep(config, options);
      write_file_atomic(config.output, sweep_csv(result.rows, sweep_timing));
      std::cout << summary_table(result.summary);
      std::size_t failed = 0;
      for (const SweepRow& row : result.rows) failed += row.error.empty() ? 0 : 1;
      std::cerr << "wrote " << result.rows.size() << " rows to " << config.output;
      if (failed) std::cerr << " (" << failed << " with errors)";
      std::cerr << '\n';
    } else if (*spectrum_cmd) {
      const Graph g = load_graph(spec_graph);
      const Spectrum s = laplacian_spectrum(g);
      std::ostringstream csv;
      csv << "index,lambda,smoothness,m,L,c,entropy\n";
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        const GraphSignal f = s.eigenvectors.col(i);
        for (int m : spec_m)
          for (int c : spec_c) {
            EntropyParams p{m, spec_L, c};
            p.validate();
            csv << i + 1 << ',' << format_double(s.eigenvalues[i]) << ','
                << format_double(normalized_smoothness(s, i)) << ',' << m << ',' << spec_L << ',' << c << ','
                << format_double(dispersion_entropy_graph(g, f, p).value) << '\n';
          }
      }
      emit(csv.str(), spec_out);
    } else if (*centrality_cmd) {
      const Graph g = load_graph(cent_graph);
      const EntropyParams p = cent_flags.params();
      std::ostringstream csv;
      csv << "measure,m,L,c,entropy,error\n";
      for (Centrality kind : kAllCentralities) {
        csv << to_string(kind) << ',' << p.m << ',' << p.delay << ',' << p.c << ',';
        try {
          csv << format_double(dispersion_entropy_graph(g, centrality(g, kind), p).value) << ",\n";
        } catch (const InputError& e) {
          csv << ',' << '"' << e.what() << "\"\n";
        } catch (const NumericError& e) {
          csv << ',' << '"' << e.what() << "\"\n";
        }
      }
      emit(csv.str(), cent_out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
