#pragma once

#include "graphent/graph.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

namespace graphent {

enum class MapFunction { ncdf };

std::string_view to_string(MapFunction f);
MapFunction map_function_from_string(std::string_view name);

struct EntropyParams {
  int m = 3;      ///< embedding dimension, >= 2
  int delay = 1;  ///< L, >= 1
  int c = 3;      ///< number of classes, >= 2
  MapFunction map = MapFunction::ncdf;
  /// Recompute mean/stddev for each embedding column instead of using the
  /// statistics of the input signal for all of them.
  bool per_column_stats = false;

  /// Throws InputError unless m >= 2, L >= 1, c >= 2 and c^m fits a PatternId.
  void validate() const;
};

using PatternId = std::uint64_t;

/// Pattern id = sum_j (class_j - 1) c^j, a bijection {1..c}^m -> [0, c^m).
PatternId pattern_of_row(std::span<const int> classes, int c);
std::vector<int> classes_of_pattern(PatternId id, int m, int c);

struct DispersionHistogram {
  int c = 0;
  int m = 0;
  std::size_t total_rows = 0;
  std::map<PatternId, std::size_t> counts;

  std::size_t support() const { return counts.size(); }
  void add(PatternId id) {
    ++counts[id];
    ++total_rows;
  }
};

struct EntropyResult {
  double value = 0.0;  ///< normalised to [0, 1]
  DispersionHistogram histogram;
  std::size_t restriction_size = 0;
};

/// Population mean and standard deviation. The standard deviation is
/// reported as exactly 0 when the spread max - min is below 1e-12 of the
/// largest magnitude, so numerically constant signals map to one class.
struct SignalStats {
  double mean = 0.0;
  double stddev = 0.0;
};
SignalStats signal_stats(std::span<const double> x);
SignalStats signal_stats(const Eigen::Ref<const Eigen::VectorXd>& x);

/// round(c * Phi((v - mu) / sigma) + 0.5), half away from zero, clamped to [1, c].
int ncdf_class(double v, double mu, double sigma, int c);

/// Class used for every entry when the reference signal has zero spread.
constexpr int constant_signal_class(int c) { return (c + 2) / 2; }

/// Elementwise ncdf_class. Requires sigma > 0.
template <typename Derived>
Eigen::VectorXi ncdf_map(const Eigen::MatrixBase<Derived>& x, double mu, double sigma, int c) {
  Eigen::VectorXi out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = ncdf_class(static_cast<double>(x[i]), mu, sigma, c);
  return out;
}

/// -(1 / ln(c^m)) sum p ln p over observed patterns.
double normalized_shannon(const DispersionHistogram& h);

/// Dispersion entropy of a graph signal. On directed graphs only the rows
/// in the restriction set contribute.
EntropyResult dispersion_entropy_graph(const Graph& g, const GraphSignal& x, const EntropyParams& p);

/// Classical dispersion entropy of a time series.
EntropyResult classical_de(std::span<const double> series, const EntropyParams& p);
EntropyResult classical_de(const GraphSignal& series, const EntropyParams& p);

}  // namespace graphent
