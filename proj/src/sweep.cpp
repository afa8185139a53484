#include "graphent/sweep.hpp"

#include "graphent/errors.hpp"
#include "graphent/generators.hpp"
#include "graphent/io.hpp"
#include "graphent/measures.hpp"
#include "graphent/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

namespace graphent {

using json = nlohmann::json;

namespace {

const std::vector<std::pair<Experiment, std::string_view>>& experiment_names() {
  static const std::vector<std::pair<Experiment, std::string_view>> names = {
      {Experiment::mix_noise, "mix-noise"},       {Experiment::mix_frequency, "mix-frequency"},
      {Experiment::rgg_radius, "rgg-radius"},     {Experiment::smallworld_p, "smallworld-p"},
      {Experiment::smallworld_k, "smallworld-k"}, {Experiment::spectrum, "spectrum"},
      {Experiment::centrality, "centrality"},
  };
  return names;
}

constexpr std::pair<GraphModel, std::string_view> kModelNames[] = {
    {GraphModel::rgg, "rgg"},   {GraphModel::watts_strogatz, "watts-strogatz"},
    {GraphModel::cycle, "cycle"}, {GraphModel::path, "path"},
    {GraphModel::file, "file"},
};

constexpr std::pair<SignalProcess, std::string_view> kProcessNames[] = {
    {SignalProcess::mix, "mix"},           {SignalProcess::sine, "sine"},
    {SignalProcess::wiener, "wiener"},     {SignalProcess::logistic, "logistic"},
    {SignalProcess::uniform, "uniform"},
};

template <typename Enum, std::size_t N>
Enum lookup(const std::pair<Enum, std::string_view> (&table)[N], std::string_view name,
            std::string_view what) {
  for (const auto& [value, text] : table)
    if (text == name) return value;
  throw InputError("unknown " + std::string(what) + " `" + std::string(name) + "`");
}

bool is_signal_experiment(Experiment e) {
  return e != Experiment::spectrum && e != Experiment::centrality;
}

bool uses_process(const SweepConfig& c, SignalProcess p) {
  return std::find(c.signal.process.begin(), c.signal.process.end(), p) != c.signal.process.end();
}

}  // namespace

std::string_view to_string(Experiment e) {
  for (const auto& [value, text] : experiment_names())
    if (value == e) return text;
  return "?";
}

Experiment experiment_from_string(std::string_view name) {
  for (const auto& [value, text] : experiment_names())
    if (text == name) return value;
  throw InputError("unknown experiment `" + std::string(name) + "`");
}

const std::vector<Experiment>& all_experiments() {
  static const std::vector<Experiment> all = [] {
    std::vector<Experiment> v;
    for (const auto& [value, text] : experiment_names()) v.push_back(value);
    return v;
  }();
  return all;
}

std::string_view to_string(GraphModel m) {
  for (const auto& [value, text] : kModelNames)
    if (value == m) return text;
  return "?";
}

std::string_view to_string(SignalProcess p) {
  for (const auto& [value, text] : kProcessNames)
    if (value == p) return text;
  return "?";
}

// ---------------------------------------------------------------- validation

void SweepConfig::validate() const {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
  };
  require(realizations >= 1, "realizations must be at least 1");
  require(!entropy.m.empty() && !entropy.L.empty() && !entropy.c.empty(),
          "entropy grids m, L and c must be non-empty");
  for (int m : entropy.m)
    for (int L : entropy.L)
      for (int c : entropy.c) EntropyParams{m, L, c}.validate();

  switch (graph.model) {
    case GraphModel::rgg:
      require(!graph.n.empty() && !graph.d.empty() && !graph.r.empty(), "rgg needs n, d and r grids");
      for (double r : graph.r) require(r > 0.0, "rgg radius must be positive");
      for (int d : graph.d) require(d >= 1, "rgg dimension must be at least 1");
      for (int n : graph.n) require(n >= 2, "rgg needs n >= 2");
      break;
    case GraphModel::watts_strogatz:
      require(!graph.n.empty() && !graph.k.empty() && !graph.p.empty(),
              "watts-strogatz needs n, k and p grids");
      for (int n : graph.n)
        for (int k : graph.k)
          require(n >= 3 && k >= 1 && 2 * k <= n - 1, "watts-strogatz needs 1 <= k <= (n-1)/2");
      for (double p : graph.p) require(p >= 0.0 && p <= 1.0, "rewiring probability must lie in [0, 1]");
      break;
    case GraphModel::cycle:
    case GraphModel::path:
      require(!graph.n.empty(), "graph n grid must be non-empty");
      for (int n : graph.n) require(n >= (graph.model == GraphModel::cycle ? 3 : 2), "graph too small");
      break;
    case GraphModel::file:
      require(!graph.path.empty(), "file model needs a path");
      break;
  }

  const bool signal_exp = is_signal_experiment(experiment);
  if (experiment == Experiment::mix_noise || experiment == Experiment::mix_frequency ||
      experiment == Experiment::rgg_radius)
    require(graph.model == GraphModel::rgg, std::string(to_string(experiment)) + " needs the rgg model");
  if (experiment == Experiment::smallworld_p || experiment == Experiment::smallworld_k)
    require(graph.model == GraphModel::watts_strogatz,
            std::string(to_string(experiment)) + " needs the watts-strogatz model");

  if (signal_exp) {
    require(!signal.process.empty(), "signal process list must be non-empty");
    require(graph.model != GraphModel::file || !uses_process(*this, SignalProcess::mix),
            "mix signals need generated coordinates");
    if (uses_process(*this, SignalProcess::mix)) {
      require(graph.model == GraphModel::rgg, "mix signals need the rgg model");
      require(!signal.f.empty() && !signal.p.empty(), "mix needs f and p grids");
      for (double p : signal.p) require(p >= 0.0 && p <= 1.0, "noise probability must lie in [0, 1]");
    }
    if (uses_process(*this, SignalProcess::sine)) require(!signal.f.empty(), "sine needs an f grid");
    if (uses_process(*this, SignalProcess::logistic)) {
      require(!signal.r_logistic.empty(), "logistic needs an r_logistic grid");
      for (double r : signal.r_logistic) require(r > 0.0 && r <= 4.0, "r_logistic must lie in (0, 4]");
      require(signal.logistic_x0 > 0.0 && signal.logistic_x0 < 1.0, "logistic_x0 must lie in (0, 1)");
      require(signal.logistic_burn_in >= 0, "logistic_burn_in must be non-negative");
    }
  } else {
    require(signal.process.empty(), std::string(to_string(experiment)) + " takes no signal section");
  }
  if (experiment == Experiment::spectrum || experiment == Experiment::centrality)
    require(!graph.directed, std::string(to_string(experiment)) + " needs an undirected graph");
}

// ---------------------------------------------------------------- json

namespace {

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!obj.is_object()) throw InputError(std::string(where) + " must be a JSON object");
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      throw InputError("unknown field `" + item.key() + "` in " + std::string(where));
  }
}

const json& field(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw InputError("missing field `" + std::string(key) + "` in " + std::string(where));
  return *it;
}

template <typename T>
std::vector<T> list_field(const json& obj, const char* key, std::string_view where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) throw InputError("`" + std::string(key) + "` in " + std::string(where) + " must be a list");
  try {
    return v.get<std::vector<T>>();
  } catch (const json::exception&) {
    throw InputError("`" + std::string(key) + "` in " + std::string(where) + " has wrongly typed entries");
  }
}

template <typename T>
T scalar_field(const json& obj, const char* key, std::string_view where) {
  try {
    return field(obj, key, where).get<T>();
  } catch (const json::exception&) {
    throw InputError("`" + std::string(key) + "` in " + std::string(where) + " has the wrong type");
  }
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(doc, {"experiment", "graph", "signal", "entropy", "realizations", "master_seed", "output"},
                 "config");

  SweepConfig c;
  c.experiment = experiment_from_string(scalar_field<std::string>(doc, "experiment", "config"));

  const json& g = field(doc, "graph", "config");
  reject_unknown(g, {"model", "n", "d", "r", "k", "p", "path", "directed"}, "graph");
  c.graph.model = lookup(kModelNames, scalar_field<std::string>(g, "model", "graph"), "graph model");
  switch (c.graph.model) {
    case GraphModel::rgg:
      c.graph.n = list_field<int>(g, "n", "graph");
      c.graph.d = list_field<int>(g, "d", "graph");
      c.graph.r = list_field<double>(g, "r", "graph");
      break;
    case GraphModel::watts_strogatz:
      c.graph.n = list_field<int>(g, "n", "graph");
      c.graph.k = list_field<int>(g, "k", "graph");
      c.graph.p = list_field<double>(g, "p", "graph");
      break;
    case GraphModel::cycle:
    case GraphModel::path:
      c.graph.n = list_field<int>(g, "n", "graph");
      break;
    case GraphModel::file:
      c.graph.path = scalar_field<std::string>(g, "path", "graph");
      c.graph.directed = scalar_field<bool>(g, "directed", "graph");
      break;
  }

  if (is_signal_experiment(c.experiment)) {
    const json& s = field(doc, "signal", "config");
    reject_unknown(s, {"process", "f", "p", "r_logistic", "logistic_x0", "logistic_burn_in"}, "signal");
    for (const auto& name : list_field<std::string>(s, "process", "signal"))
      c.signal.process.push_back(lookup(kProcessNames, name, "signal process"));
    if (uses_process(c, SignalProcess::mix) || uses_process(c, SignalProcess::sine))
      c.signal.f = list_field<double>(s, "f", "signal");
    if (uses_process(c, SignalProcess::mix)) c.signal.p = list_field<double>(s, "p", "signal");
    if (uses_process(c, SignalProcess::logistic)) {
      c.signal.r_logistic = list_field<double>(s, "r_logistic", "signal");
      c.signal.logistic_x0 = scalar_field<double>(s, "logistic_x0", "signal");
      c.signal.logistic_burn_in = scalar_field<int>(s, "logistic_burn_in", "signal");
    }
  } else if (doc.contains("signal")) {
    throw InputError(std::string(to_string(c.experiment)) + " takes no signal section");
  }

  const json& e = field(doc, "entropy", "config");
  reject_unknown(e, {"m", "L", "c"}, "entropy");
  c.entropy.m = list_field<int>(e, "m", "entropy");
  c.entropy.L = list_field<int>(e, "L", "entropy");
  c.entropy.c = list_field<int>(e, "c", "entropy");

  c.realizations = scalar_field<int>(doc, "realizations", "config");
  c.master_seed = scalar_field<std::uint64_t>(doc, "master_seed", "config");
  c.output = scalar_field<std::string>(doc, "output", "config");
  c.validate();
  return c;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_sweep_config(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string to_json(const SweepConfig& c) {
  json doc;
  doc["experiment"] = std::string(to_string(c.experiment));
  json g;
  g["model"] = std::string(to_string(c.graph.model));
  switch (c.graph.model) {
    case GraphModel::rgg:
      g["n"] = c.graph.n;
      g["d"] = c.graph.d;
      g["r"] = c.graph.r;
      break;
    case GraphModel::watts_strogatz:
      g["n"] = c.graph.n;
      g["k"] = c.graph.k;
      g["p"] = c.graph.p;
      break;
    case GraphModel::cycle:
    case GraphModel::path:
      g["n"] = c.graph.n;
      break;
    case GraphModel::file:
      g["path"] = c.graph.path;
      g["directed"] = c.graph.directed;
      break;
  }
  doc["graph"] = g;
  if (is_signal_experiment(c.experiment)) {
    json s;
    std::vector<std::string> names;
    for (SignalProcess p : c.signal.process) names.emplace_back(to_string(p));
    s["process"] = names;
    if (uses_process(c, SignalProcess::mix) || uses_process(c, SignalProcess::sine)) s["f"] = c.signal.f;
    if (uses_process(c, SignalProcess::mix)) s["p"] = c.signal.p;
    if (uses_process(c, SignalProcess::logistic)) {
      s["r_logistic"] = c.signal.r_logistic;
      s["logistic_x0"] = c.signal.logistic_x0;
      s["logistic_burn_in"] = c.signal.logistic_burn_in;
    }
    doc["signal"] = s;
  }
  doc["entropy"] = {{"m", c.entropy.m}, {"L", c.entropy.L}, {"c", c.entropy.c}};
  doc["realizations"] = c.realizations;
  doc["master_seed"] = c.master_seed;
  doc["output"] = c.output;
  return doc.dump(2) + "\n";
}

SweepConfig default_config(Experiment e) {
  constexpr double pi = std::numbers::pi;
  SweepConfig c;
  c.experiment = e;
  c.realizations = 10;
  c.master_seed = 20230601;
  c.entropy = {{3}, {1}, {3}};
  c.output = std::string(to_string(e)) + ".csv";
  switch (e) {
    case Experiment::mix_noise:
      c.graph = {GraphModel::rgg, {500}, {2}, {0.08}, {}, {}, {}, false};
      c.signal.process = {SignalProcess::mix};
      c.signal.f = {2 * pi};
      c.signal.p = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
      break;
    case Experiment::mix_frequency:
      c.graph = {GraphModel::rgg, {500}, {2}, {0.08}, {}, {}, {}, false};
      c.signal.process = {SignalProcess::mix};
      c.signal.f = {1.5 * pi, 2 * pi, 4 * pi, 6 * pi, 8 * pi, 10 * pi, 12 * pi, 14 * pi, 16 * pi};
      c.signal.p = {0.0, 0.2};
      break;
    case Experiment::rgg_radius:
      c.graph = {GraphModel::rgg, {1500}, {2}, {0.05, 0.1, 0.15, 0.2, 0.25, 0.3}, {}, {}, {}, false};
      c.signal.process = {SignalProcess::mix};
      c.signal.f = {2 * pi};
      c.signal.p = {0.0};
      c.entropy = {{2}, {1}, {2, 3, 4}};
      break;
    case Experiment::smallworld_p:
      c.graph = {GraphModel::watts_strogatz, {500}, {}, {}, {1}, {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}, {}, false};
      c.signal.process = {SignalProcess::sine, SignalProcess::wiener, SignalProcess::logistic,
                          SignalProcess::uniform};
      c.signal.f = {10.0};
      c.signal.r_logistic = {3.3, 3.7};
      break;
    case Experiment::smallworld_k:
      c.graph = {GraphModel::watts_strogatz, {500}, {}, {}, {1, 2, 3, 4, 5, 6}, {0.05}, {}, false};
      c.signal.process = {SignalProcess::sine, SignalProcess::wiener, SignalProcess::logistic,
                          SignalProcess::uniform};
      c.signal.f = {10.0};
      c.signal.r_logistic = {3.3, 3.7};
      break;
    case Experiment::spectrum:
      c.graph = {GraphModel::rgg, {300}, {2}, {0.1}, {}, {}, {}, false};
      c.entropy = {{2}, {1}, {2, 3, 4}};
      c.realizations = 1;
      break;
    case Experiment::centrality:
      c.graph = {GraphModel::watts_strogatz, {500}, {}, {}, {3}, {0.1}, {}, false};
      break;
  }
  return c;
}

// ---------------------------------------------------------------- rows

std::string SweepRow::grid_key() const {
  std::ostringstream key;
  auto opt = [&](const auto& v) {
    if (v) key << format_double(static_cast<double>(*v));
    key << ',';
  };
  key << experiment << ',' << n << ',';
  opt(d);
  opt(r);
  opt(k);
  opt(rewire_p);
  key << process << ',';
  opt(f);
  opt(noise_p);
  opt(r_logistic);
  opt(index);
  key << m << ',' << L << ',' << c;
  return key.str();
}

namespace {

constexpr const char* kGridHeader =
    "experiment,n,d,r,k,rewire_p,process,f,noise_p,r_logistic,index,m,L,c";

struct GraphPoint {
  int n = 0;
  std::optional<int> d;
  std::optional<double> r;
  std::optional<int> k;
  std::optional<double> p;
};

struct SignalPoint {
  SignalProcess process = SignalProcess::uniform;
  std::optional<double> f;
  std::optional<double> noise_p;
  std::optional<double> r_logistic;
};

struct Task {
  GraphPoint graph;
  std::optional<SignalPoint> signal;
  int realization = 0;
};

std::vector<GraphPoint> graph_points(const SweepConfig& c, VertexId file_size) {
  std::vector<GraphPoint> out;
  switch (c.graph.model) {
    case GraphModel::rgg:
      for (int n : c.graph.n)
        for (int d : c.graph.d)
          for (double r : c.graph.r) out.push_back({n, d, r, {}, {}});
      break;
    case GraphModel::watts_strogatz:
      for (int n : c.graph.n)
        for (int k : c.graph.k)
          for (double p : c.graph.p) out.push_back({n, {}, {}, k, p});
      break;
    case GraphModel::cycle:
    case GraphModel::path:
      for (int n : c.graph.n) out.push_back({n, {}, {}, {}, {}});
      break;
    case GraphModel::file:
      out.push_back({file_size, {}, {}, {}, {}});
      break;
  }
  return out;
}

std::vector<SignalPoint> signal_points(const SweepConfig& c) {
  std::vector<SignalPoint> out;
  for (SignalProcess p : c.signal.process) {
    switch (p) {
      case SignalProcess::mix:
        for (double f : c.signal.f)
          for (double q : c.signal.p) out.push_back({p, f, q, {}});
        break;
      case SignalProcess::sine:
        for (double f : c.signal.f) out.push_back({p, f, {}, {}});
        break;
      case SignalProcess::logistic:
        for (double r : c.signal.r_logistic) out.push_back({p, {}, {}, r});
        break;
      case SignalProcess::wiener:
      case SignalProcess::uniform:
        out.push_back({p, {}, {}, {}});
        break;
    }
  }
  return out;
}

struct BuiltGraph {
  std::optional<GeometricGraph> geometric;
  std::shared_ptr<const Graph> graph;
};

BuiltGraph build_graph(const SweepConfig& c, const GraphPoint& gp, int realization,
                       const std::shared_ptr<const Graph>& file_graph) {
  Rng rng(derive_seed(c.master_seed, "graph", static_cast<std::uint64_t>(realization)));
  BuiltGraph out;
  switch (c.graph.model) {
    case GraphModel::rgg:
      out.geometric = rgg(gp.n, *gp.d, *gp.r, rng);
      out.graph = std::make_shared<const Graph>(out.geometric->graph);
      break;
    case GraphModel::watts_strogatz:
      out.graph = std::make_shared<const Graph>(watts_strogatz(gp.n, *gp.k, *gp.p, rng));
      break;
    case GraphModel::cycle:
      out.graph = std::make_shared<const Graph>(cycle(gp.n));
      break;
    case GraphModel::path:
      out.graph = std::make_shared<const Graph>(path(gp.n));
      break;
    case GraphModel::file:
      out.graph = file_graph;
      break;
  }
  return out;
}

GraphSignal build_signal(const SweepConfig& c, const SignalPoint& sp, const BuiltGraph& bg, int realization) {
  Rng rng(derive_seed(c.master_seed, "signal", static_cast<std::uint64_t>(realization)));
  const int n = bg.graph->size();
  switch (sp.process) {
    case SignalProcess::mix:
      return mix_signal(*bg.geometric, *sp.noise_p, *sp.f, rng);
    case SignalProcess::sine:
      return sine_signal(n, *sp.f);
    case SignalProcess::wiener:
      return wiener_signal(n, rng);
    case SignalProcess::logistic:
      return logistic_signal(n, *sp.r_logistic, c.signal.logistic_x0, c.signal.logistic_burn_in);
    case SignalProcess::uniform:
      return uniform_signal(n, rng);
  }
  throw InputError("unknown signal process");
}

SweepRow base_row(const SweepConfig& c, const Task& t) {
  SweepRow row;
  row.experiment = std::string(to_string(c.experiment));
  row.realization = t.realization;
  row.n = t.graph.n;
  row.d = t.graph.d;
  row.r = t.graph.r;
  row.k = t.graph.k;
  row.rewire_p = t.graph.p;
  if (t.signal) {
    row.process = std::string(to_string(t.signal->process));
    row.f = t.signal->f;
    row.noise_p = t.signal->noise_p;
    row.r_logistic = t.signal->r_logistic;
  }
  return row;
}

template <typename Fn>
void for_each_entropy_params(const SweepConfig& c, Fn&& fn) {
  for (int m : c.entropy.m)
    for (int L : c.entropy.L)
      for (int cls : c.entropy.c) fn(EntropyParams{m, L, cls});
}

void fill_entropy(SweepRow& row, const Graph& g, const GraphSignal& x, const EntropyParams& p) {
  row.m = p.m;
  row.L = p.delay;
  row.c = p.c;
  const auto start = std::chrono::steady_clock::now();
  try {
    EntropyResult r = dispersion_entropy_graph(g, x, p);
    row.entropy = r.value;
    row.support = r.histogram.support();
    row.rows = r.restriction_size;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void error_rows(const SweepConfig& c, const SweepRow& base, const std::string& what,
                std::vector<SweepRow>& out) {
  for_each_entropy_params(c, [&](const EntropyParams& p) {
    SweepRow row = base;
    row.m = p.m;
    row.L = p.delay;
    row.c = p.c;
    row.error = what;
    out.push_back(std::move(row));
  });
}

std::vector<SweepRow> run_task(const SweepConfig& c, const Task& t,
                               const std::shared_ptr<const Graph>& file_graph) {
  std::vector<SweepRow> out;
  const SweepRow base = base_row(c, t);

  BuiltGraph bg;
  try {
    bg = build_graph(c, t.graph, t.realization, file_graph);
  } catch (const std::exception& e) {
    if (c.experiment == Experiment::centrality) {
      for (Centrality kind : kAllCentralities) {
        SweepRow row = base;
        row.process = std::string(to_string(kind));
        error_rows(c, row, e.what(), out);
      }
    } else {
      error_rows(c, base, e.what(), out);
    }
    return out;
  }
  const Graph& g = *bg.graph;

  if (c.experiment == Experiment::spectrum) {
    Spectrum s;
    try {
      s = laplacian_spectrum(g);
    } catch (const std::exception& e) {
      error_rows(c, base, e.what(), out);
      return out;
    }
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      const GraphSignal f = s.eigenvectors.col(i);
      SweepRow row = base;
      row.process = "eigenvector";
      row.index = static_cast<int>(i + 1);
      row.lambda = s.eigenvalues[i];
      row.smoothness = normalized_smoothness(s, i);
      for_each_entropy_params(c, [&](const EntropyParams& p) {
        SweepRow r = row;
        fill_entropy(r, g, f, p);
        out.push_back(std::move(r));
      });
    }
    return out;
  }

  if (c.experiment == Experiment::centrality) {
    for (Centrality kind : kAllCentralities) {
      SweepRow row = base;
      row.process = std::string(to_string(kind));
      GraphSignal x;
      try {
        x = centrality(g, kind);
      } catch (const std::exception& e) {
        error_rows(c, row, e.what(), out);
        continue;
      }
      for_each_entropy_params(c, [&](const EntropyParams& p) {
        SweepRow r = row;
        fill_entropy(r, g, x, p);
        out.push_back(std::move(r));
      });
    }
    return out;
  }

  GraphSignal x;
  try {
    x = build_signal(c, *t.signal, bg, t.realization);
  } catch (const std::exception& e) {
    error_rows(c, base, e.what(), out);
    return out;
  }
  for_each_entropy_params(c, [&](const EntropyParams& p) {
    SweepRow r = base;
    fill_entropy(r, g, x, p);
    out.push_back(std::move(r));
  });
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, const SweepOptions& options) {
  config.validate();

  std::shared_ptr<const Graph> file_graph;
  if (config.graph.model == GraphModel::file) {
    EdgeListOptions eo;
    eo.directedness = config.graph.directed ? Directedness::directed : Directedness::undirected;
    file_graph = std::make_shared<const Graph>(load_edge_list(config.graph.path, eo).graph);
  }

  std::vector<Task> tasks;
  const auto gps = graph_points(config, file_graph ? file_graph->size() : 0);
  const auto sps = is_signal_experiment(config.experiment) ? signal_points(config) : std::vector<SignalPoint>{};
  for (const GraphPoint& gp : gps) {
    if (sps.empty()) {
      for (int rz = 0; rz < config.realizations; ++rz) tasks.push_back({gp, std::nullopt, rz});
    } else {
      for (const SignalPoint& sp : sps)
        for (int rz = 0; rz < config.realizations; ++rz) tasks.push_back({gp, sp, rz});
    }
  }

  // Results land in per-task slots, so the output order never depends on
  // scheduling.
  std::vector<std::vector<SweepRow>> slots(tasks.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) slots[i] = run_task(config, tasks[i], file_graph);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SweepResult result;
  for (auto& slot : slots)
    for (auto& row : slot) result.rows.push_back(std::move(row));
  result.summary = summarize(result.rows);
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows) {
  std::vector<SummaryRow> out;
  std::map<std::string, std::size_t> slot;
  std::vector<std::vector<double>> values;
  for (const SweepRow& row : rows) {
    std::string key = row.grid_key();
    auto [it, inserted] = slot.try_emplace(key, out.size());
    if (inserted) {
      out.push_back({key, 0, 0, 0.0, 0.0});
      values.emplace_back();
    }
    if (row.entropy)
      values[it->second].push_back(*row.entropy);
    else
      ++out[it->second].errors;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& v = values[i];
    out[i].count = v.size();
    if (v.empty()) continue;
    double sum = 0.0;
    for (double x : v) sum += x;
    out[i].mean = sum / static_cast<double>(v.size());
    if (v.size() > 1) {
      double ss = 0.0;
      for (double x : v) ss += (x - out[i].mean) * (x - out[i].mean);
      out[i].stddev = std::sqrt(ss / static_cast<double>(v.size() - 1));
    }
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool timing) {
  std::ostringstream out;
  out << "experiment,realization,n,d,r,k,rewire_p,process,f,noise_p,r_logistic,index,lambda,"
         "smoothness,m,L,c,entropy,support,rows,error";
  if (timing) out << ",wall_ms";
  out << '\n';
  auto opt = [&](const auto& v) {
    if (v) {
      using T = std::decay_t<decltype(*v)>;
      if constexpr (std::is_floating_point_v<T>)
        out << format_double(*v);
      else
        out << *v;
    }
    out << ',';
  };
  auto quoted = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch == '\n' ? ' ' : ch;
    }
    return q + "\"";
  };
  for (const SweepRow& r : rows) {
    out << r.experiment << ',' << r.realization << ',' << r.n << ',';
    opt(r.d);
    opt(r.r);
    opt(r.k);
    opt(r.rewire_p);
    out << r.process << ',';
    opt(r.f);
    opt(r.noise_p);
    opt(r.r_logistic);
    opt(r.index);
    opt(r.lambda);
    opt(r.smoothness);
    out << r.m << ',' << r.L << ',' << r.c << ',';
    opt(r.entropy);
    opt(r.support);
    opt(r.rows);
    out << quoted(r.error);
    if (timing) out << ',' << format_fixed(r.wall_ms, 3);
    out << '\n';
  }
  return out.str();
}

std::string summary_table(const std::vector<SummaryRow>& summary) {
  std::ostringstream out;
  out << kGridHeader << ",count,errors,mean,std\n";
  for (const SummaryRow& s : summary) {
    out << s.grid_key << ',' << s.count << ',' << s.errors << ',';
    if (s.count > 0)
      out << format_fixed(s.mean, 12) << ',' << format_fixed(s.stddev, 12);
    else
      out << ',';
    out << '\n';
  }
  return out.str();
}

}  // namespace graphent
