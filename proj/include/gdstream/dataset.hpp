#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gdstream/errors.hpp"
#include "gdstream/graph.hpp"
#include "gdstream/math.hpp"

namespace gdstream {

// Labelled collection of preprocessed edge streams.
struct Dataset {
  std::string name;
  std::vector<EdgeStream> graphs;
  std::vector<std::int64_t> labels;

  std::size_t size() const noexcept { return graphs.size(); }
};

namespace detail {

inline std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw data_error("missing file '" + path.string() + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) lines.pop_back();
  return lines;
}

inline std::int64_t parse_int(const std::string& s, const std::filesystem::path& file, std::size_t line_no) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || s.find_first_not_of(" \t", used) != std::string::npos) {
    throw data_error(file.filename().string() + " line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return v;
}

inline std::filesystem::path find_bundle_prefix(const std::filesystem::path& dir) {
  const auto named = dir / (dir.filename().string() + "_A.txt");
  if (std::filesystem::exists(named)) return dir / dir.filename();
  if (std::filesystem::is_directory(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      const std::string file = entry.path().filename().string();
      if (file.size() > 6 && file.ends_with("_A.txt")) return dir / file.substr(0, file.size() - 6);
    }
  }
  throw data_error("no *_A.txt edge file in '" + dir.string() + "'");
}

}  // namespace detail

// Reads a DS_A.txt / DS_graph_indicator.txt / DS_graph_labels.txt bundle
// (1-indexed vertices and graphs). Each graph is relabelled locally,
// preprocessed with a per-graph seed derived from `seed`, and keeps its
// isolated vertices through n_hint.
inline Dataset load_benchmark_dataset(const std::filesystem::path& dir, std::uint64_t seed) {
  const auto prefix = detail::find_bundle_prefix(dir);
  const std::filesystem::path a_file = prefix.string() + "_A.txt";
  const std::filesystem::path ind_file = prefix.string() + "_graph_indicator.txt";
  const std::filesystem::path lab_file = prefix.string() + "_graph_labels.txt";

  const auto indicator_lines = detail::read_lines(ind_file);
  const auto label_lines = detail::read_lines(lab_file);
  const auto edge_lines = detail::read_lines(a_file);

  std::vector<std::size_t> graph_of(indicator_lines.size());
  std::vector<vertex_t> local_id(indicator_lines.size());
  std::vector<std::size_t> vertex_count;
  for (std::size_t i = 0; i < indicator_lines.size(); ++i) {
    const auto g = detail::parse_int(indicator_lines[i], ind_file, i + 1);
    if (g < 1) throw data_error(ind_file.filename().string() + " line " + std::to_string(i + 1) + ": graph ids start at 1");
    const auto gi = static_cast<std::size_t>(g - 1);
    if (vertex_count.size() <= gi) vertex_count.resize(gi + 1, 0);
    graph_of[i] = gi;
    local_id[i] = static_cast<vertex_t>(vertex_count[gi]++);
  }
  const std::size_t graph_count = vertex_count.size();
  if (label_lines.size() != graph_count) {
    throw data_error(lab_file.filename().string() + " has " + std::to_string(label_lines.size()) +
                     " labels but the indicator names " + std::to_string(graph_count) + " graphs");
  }

  Dataset ds;
  ds.name = prefix.filename().string();
  ds.labels.reserve(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) ds.labels.push_back(detail::parse_int(label_lines[g], lab_file, g + 1));

  std::vector<std::vector<RawEdge>> raw(graph_count);
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    const auto& line = edge_lines[i];
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw data_error(a_file.filename().string() + " line " + std::to_string(i + 1) + ": expected 'u, v'");
    }
    const auto a = detail::parse_int(line.substr(0, comma), a_file, i + 1);
    const auto b = detail::parse_int(line.substr(comma + 1), a_file, i + 1);
    const auto n_total = static_cast<std::int64_t>(indicator_lines.size());
    if (a < 1 || b < 1 || a > n_total || b > n_total) {
      throw data_error(a_file.filename().string() + " line " + std::to_string(i + 1) + ": vertex out of range");
    }
    const auto ua = static_cast<std::size_t>(a - 1);
    const auto ub = static_cast<std::size_t>(b - 1);
    if (graph_of[ua] != graph_of[ub]) {
      throw data_error(a_file.filename().string() + " line " + std::to_string(i + 1) + ": edge crosses graphs " +
                       std::to_string(graph_of[ua] + 1) + " and " + std::to_string(graph_of[ub] + 1));
    }
    raw[graph_of[ua]].emplace_back(local_id[ua], local_id[ub]);
  }

  ds.graphs.reserve(graph_count);
  for (std::size_t g = 0; g < graph_count; ++g) {
    EdgeStream s = preprocess(raw[g], derive_seed(seed, g));
    s.n_hint = vertex_count[g];
    ds.graphs.push_back(std::move(s));
  }
  return ds;
}

// Writes `ds` as a <dir>/<name>_*.txt bundle readable by
// load_benchmark_dataset. Each edge is written in both orientations.
inline void save_benchmark_dataset(const std::filesystem::path& dir, const Dataset& ds) {
  if (ds.labels.size() != ds.graphs.size()) throw data_error("dataset has mismatched graph and label counts");
  std::filesystem::create_directories(dir);
  const std::string prefix = (dir / ds.name).string();
  std::ofstream a(prefix + "_A.txt");
  std::ofstream ind(prefix + "_graph_indicator.txt");
  std::ofstream lab(prefix + "_graph_labels.txt");
  if (!a || !ind || !lab) throw data_error("cannot write dataset bundle under '" + dir.string() + "'");
  std::size_t offset = 1;
  for (std::size_t g = 0; g < ds.graphs.size(); ++g) {
    const std::size_t n = ds.graphs[g].vertex_count();
    for (std::size_t v = 0; v < n; ++v) ind << g + 1 << '\n';
    for (const Edge& e : ds.graphs[g].edges) {
      a << offset + e.u << ", " << offset + e.v << '\n';
      a << offset + e.v << ", " << offset + e.u << '\n';
    }
    lab << ds.labels[g] << '\n';
    offset += n;
  }
}

}  // namespace gdstream
