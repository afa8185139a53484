#include "graphent/entropy.hpp"

#include "graphent/errors.hpp"
#include "graphent/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace graphent {

std::string_view to_string(MapFunction f) {
  switch (f) {
    case MapFunction::ncdf:
      return "ncdf";
  }
  return "?";
}

MapFunction map_function_from_string(std::string_view name) {
  if (name == "ncdf") return MapFunction::ncdf;
  throw InputError("unknown map function `" + std::string(name) + "`");
}

void EntropyParams::validate() const {
  if (m < 2) throw InputError("embedding dimension m must be at least 2");
  if (delay < 1) throw InputError("delay L must be at least 1");
  if (c < 2) throw InputError("class count c must be at least 2");
  PatternId space = 1;
  for (int j = 0; j < m; ++j) {
    if (space > std::numeric_limits<PatternId>::max() / static_cast<PatternId>(c))
      throw InputError("c^m does not fit in 64 bits");
    space *= static_cast<PatternId>(c);
  }
}

PatternId pattern_of_row(std::span<const int> classes, int c) {
  PatternId id = 0;
  PatternId scale = 1;
  for (int cls : classes) {
    if (cls < 1 || cls > c)
      throw InputError("class " + std::to_string(cls) + " outside 1.." + std::to_string(c));
    id += static_cast<PatternId>(cls - 1) * scale;
    scale *= static_cast<PatternId>(c);
  }
  return id;
}

std::vector<int> classes_of_pattern(PatternId id, int m, int c) {
  std::vector<int> classes(m);
  for (int j = 0; j < m; ++j) {
    classes[j] = static_cast<int>(id % static_cast<PatternId>(c)) + 1;
    id /= static_cast<PatternId>(c);
  }
  if (id != 0) throw InputError("pattern id out of range for the given m and c");
  return classes;
}

SignalStats signal_stats(std::span<const double> x) {
  if (x.empty()) throw InputError("statistics of an empty signal are undefined");
  double sum = 0.0;
  double lo = x.front(), hi = x.front();
  for (double v : x) {
    sum += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  SignalStats s;
  s.mean = sum / static_cast<double>(x.size());
  if (hi - lo <= 1e-12 * std::max(std::abs(lo), std::abs(hi))) return s;
  double ss = 0.0;
  for (double v : x) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(x.size()));
  return s;
}

SignalStats signal_stats(const Eigen::Ref<const Eigen::VectorXd>& x) {
  return signal_stats(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
}

int ncdf_class(double v, double mu, double sigma, int c) {
  const double phi = 0.5 * std::erfc(-(v - mu) / (sigma * std::sqrt(2.0)));
  const double k = std::round(c * phi + 0.5);
  return static_cast<int>(std::clamp(k, 1.0, static_cast<double>(c)));
}

double normalized_shannon(const DispersionHistogram& h) {
  if (h.total_rows == 0) throw InputError("entropy of an empty histogram is undefined");
  const double total = static_cast<double>(h.total_rows);
  double acc = 0.0;
  for (const auto& [id, count] : h.counts) {
    const double p = static_cast<double>(count) / total;
    acc -= p * std::log(p);
  }
  const double value = acc / (h.m * std::log(static_cast<double>(h.c)));
  return std::clamp(value, 0.0, 1.0) + 0.0;
}

namespace {

// Maps each column of `y` to classes using either `shared` statistics or
// the column's own, then counts one pattern per row.
DispersionHistogram histogram_of(const Eigen::MatrixXd& y, const SignalStats& shared,
                                 const EntropyParams& p) {
  const Eigen::Index rows = y.rows();
  Eigen::MatrixXi cls(rows, p.m);
  for (int k = 0; k < p.m; ++k) {
    SignalStats s = p.per_column_stats ? signal_stats(y.col(k)) : shared;
    if (s.stddev > 0.0)
      cls.col(k) = ncdf_map(y.col(k), s.mean, s.stddev, p.c);
    else
      cls.col(k).setConstant(constant_signal_class(p.c));
  }

  DispersionHistogram h{p.c, p.m, 0, {}};
  std::vector<int> row(p.m);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (int k = 0; k < p.m; ++k) row[k] = cls(i, k);
    h.add(pattern_of_row(row, p.c));
  }
  return h;
}

}  // namespace

EntropyResult dispersion_entropy_graph(const Graph& g, const GraphSignal& x, const EntropyParams& p) {
  p.validate();
  if (x.size() != g.size())
    throw InputError("signal has " + std::to_string(x.size()) + " values but the graph has " +
                     std::to_string(g.size()) + " vertices");
  if (!x.allFinite()) throw InputError("signal contains non-finite values");

  const SignalStats stats = signal_stats(x);
  EmbeddingMatrix y = embedding_matrix(g, x, p.m, p.delay);

  EntropyResult r;
  r.histogram = histogram_of(y.columns, stats, p);
  r.restriction_size = y.rows.size();
  r.value = normalized_shannon(r.histogram);
  return r;
}

EntropyResult classical_de(std::span<const double> series, const EntropyParams& p) {
  p.validate();
  const auto n = static_cast<Eigen::Index>(series.size());
  const Eigen::Index span = static_cast<Eigen::Index>(p.m - 1) * p.delay;
  if (n < span + 1)
    throw InputError("series of length " + std::to_string(n) + " is too short for m=" +
                     std::to_string(p.m) + ", L=" + std::to_string(p.delay));
  for (double v : series)
    if (!std::isfinite(v)) throw InputError("series contains non-finite values");

  const SignalStats stats = signal_stats(series);
  const Eigen::Index rows = n - span;
  Eigen::MatrixXd y(rows, p.m);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (int k = 0; k < p.m; ++k) y(i, k) = series[static_cast<std::size_t>(i + k * p.delay)];

  EntropyResult r;
  r.histogram = histogram_of(y, stats, p);
  r.restriction_size = static_cast<std::size_t>(rows);
  r.value = normalized_shannon(r.histogram);
  return r;
}

EntropyResult classical_de(const GraphSignal& series, const EntropyParams& p) {
  return classical_de(std::span<const double>(series.data(), static_cast<std::size_t>(series.size())), p);
}

}  // namespace graphent
