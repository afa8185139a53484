#include "graphent/io.hpp"

#include "graphent/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace graphent {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool is_skippable(const std::vector<std::string_view>& fields) {
  return fields.empty() || fields.front().front() == '#';
}

std::optional<double> parse_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<unsigned long long> parse_index(std::string_view text) {
  unsigned long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

struct RawEdge {
  std::string u, v;
  double w;
  std::size_t line;
};

}  // namespace

LoadedGraph parse_edge_list(std::istream& in, const EdgeListOptions& options) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (is_skippable(fields)) continue;
    if (fields.size() != 2 && fields.size() != 3)
      fail_at(line_no, "expected `u v [w]`, got " + std::to_string(fields.size()) + " fields");
    double w = 1.0;
    if (fields.size() == 3) {
      auto parsed = parse_double(fields[2]);
      if (!parsed) fail_at(line_no, "weight `" + std::string(fields[2]) + "` is not a number");
      if (!std::isfinite(*parsed) || *parsed <= 0.0) fail_at(line_no, "weight must be positive");
      if (options.use_weights) w = *parsed;
    }
    if (fields[0] == fields[1]) fail_at(line_no, "self-loop on `" + std::string(fields[0]) + "`");
    raw.push_back({std::string(fields[0]), std::string(fields[1]), w, line_no});
  }
  if (raw.empty()) throw InputError("edge list contains no edges");

  // Label -> dense id.
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  bool numeric = std::all_of(raw.begin(), raw.end(), [](const RawEdge& e) {
    return parse_index(e.u).has_value() && parse_index(e.v).has_value();
  });
  if (numeric) {
    std::map<unsigned long long, std::string> ordered;
    for (const RawEdge& e : raw) {
      ordered.emplace(*parse_index(e.u), e.u);
      ordered.emplace(*parse_index(e.v), e.v);
    }
    for (const auto& [value, text] : ordered) labels.push_back(text);
    // "007" and "7" name the same vertex.
    for (const RawEdge& e : raw) {
      for (const std::string* s : {&e.u, &e.v}) {
        auto it = ordered.find(*parse_index(*s));
        ids.emplace(*s, static_cast<VertexId>(std::distance(ordered.begin(), it)));
      }
    }
  } else {
    for (const RawEdge& e : raw) {
      for (const std::string* s : {&e.u, &e.v}) {
        if (ids.emplace(*s, static_cast<VertexId>(labels.size())).second) labels.push_back(*s);
      }
    }
  }

  const bool directed = options.directedness == Directedness::directed;
  std::map<std::pair<VertexId, VertexId>, std::pair<double, std::size_t>> unique;
  std::size_t merged = 0;
  for (const RawEdge& e : raw) {
    VertexId u = ids.at(e.u), v = ids.at(e.v);
    if (u == v) fail_at(e.line, "self-loop on vertex `" + e.u + "`");
    if (!directed && u > v) std::swap(u, v);
    auto [it, inserted] = unique.try_emplace({u, v}, e.w, e.line);
    if (!inserted) {
      if (it->second.first != e.w)
        fail_at(e.line, "edge repeats line " + std::to_string(it->second.second) +
                            " with a different weight");
      ++merged;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(unique.size());
  for (const auto& [key, value] : unique) edges.push_back({key.first, key.second, value.first});
  const auto n = static_cast<VertexId>(labels.size());
  return LoadedGraph{Graph(n, std::move(edges), options.directedness), std::move(labels), merged};
}

LoadedGraph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list " + path.string());
  try {
    return parse_edge_list(in, options);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

GraphSignal parse_signal(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (is_skippable(fields)) continue;
    if (fields.size() != 1) fail_at(line_no, "expected one value per line");
    auto parsed = parse_double(fields[0]);
    if (!parsed) fail_at(line_no, "`" + std::string(fields[0]) + "` is not a number");
    if (!std::isfinite(*parsed)) fail_at(line_no, "signal values must be finite");
    values.push_back(*parsed);
  }
  if (values.empty()) throw InputError("signal file contains no values");
  return Eigen::Map<const GraphSignal>(values.data(), static_cast<Eigen::Index>(values.size()));
}

GraphSignal load_signal(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open signal " + path.string());
  try {
    return parse_signal(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

GraphSignal load_signal(const std::filesystem::path& path, const Graph& g) {
  GraphSignal x = load_signal(path);
  if (x.size() != g.size())
    throw InputError(path.string() + ": signal has " + std::to_string(x.size()) +
                     " values but the graph has " + std::to_string(g.size()) + " vertices");
  return x;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_fixed(double value, int digits) {
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, digits);
  if (ec != std::errc()) return format_double(value);
  return std::string(buf, ptr);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.is_weighted()) out << ' ' << format_double(e.w);
    out << '\n';
  }
}

void write_signal(std::ostream& out, const GraphSignal& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) out << format_double(x[i]) << '\n';
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw InputError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

}  // namespace graphent
