#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gdstream/errors.hpp"

namespace gdstream {

using vertex_t = std::uint32_t;

// Undirected edge stored as (min, max).
struct Edge {
  vertex_t u = 0;
  vertex_t v = 0;

  constexpr Edge() = default;
  constexpr Edge(vertex_t a, vertex_t b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw data_error("self-loop on vertex " + std::to_string(a));
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.u} << 32) | e.v);
  }
};

using RawEdge = std::pair<std::uint64_t, std::uint64_t>;

// Ordered sequence of edges, the unit every estimator consumes.
struct EdgeStream {
  std::vector<Edge> edges;
  // Overrides the max-label + 1 vertex count, e.g. to declare trailing
  // isolated vertices.
  std::optional<std::size_t> n_hint;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }
  auto begin() const noexcept { return edges.begin(); }
  auto end() const noexcept { return edges.end(); }

  std::size_t max_label_plus_one() const noexcept {
    std::size_t n = 0;
    for (const Edge& e : edges) n = std::max<std::size_t>(n, std::size_t{e.v} + 1);
    return n;
  }

  std::size_t vertex_count() const noexcept {
    return n_hint ? std::max(*n_hint, max_label_plus_one()) : max_label_plus_one();
  }
};

// Drops self-loops and duplicates (either orientation, first kept),
// relabels vertices to 0.. by first appearance, then shuffles with a
// seeded uniform permutation.
inline EdgeStream preprocess(std::span<const RawEdge> raw, std::uint64_t seed) {
  EdgeStream out;
  std::unordered_map<std::uint64_t, vertex_t> relabel;
  std::unordered_set<Edge, EdgeHash> seen;
  auto label = [&relabel](std::uint64_t x) {
    auto [it, inserted] = relabel.try_emplace(x, static_cast<vertex_t>(relabel.size()));
    return it->second;
  };
  for (const auto& [a, b] : raw) {
    if (a == b) continue;
    const vertex_t u = label(a);
    const vertex_t v = label(b);
    const Edge e{u, v};
    if (seen.insert(e).second) out.edges.push_back(e);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(out.edges.begin(), out.edges.end(), rng);
  return out;
}

// Parses the "u v" per line edge-list format; '#' lines and blank lines are
// skipped.
inline std::vector<RawEdge> read_edge_list(std::istream& in) {
  std::vector<RawEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = -1;
    long long b = -1;
    std::string rest;
    if (!(fields >> a >> b) || a < 0 || b < 0 || (fields >> rest)) {
      throw data_error("line " + std::to_string(line_no) + ": expected two non-negative integers, got '" +
                       line + "'");
    }
    edges.emplace_back(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  return edges;
}

inline std::vector<RawEdge> read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

// Exact adjacency view of a small graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return m_; }

  std::size_t degree(vertex_t v) const { return adj_.at(v).size(); }
  std::span<const vertex_t> neighbors(vertex_t v) const { return adj_.at(v); }

  bool has_edge(vertex_t u, vertex_t v) const {
    if (u >= n() || v >= n()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  // Rejects self-loops, duplicates and out-of-range endpoints.
  void add_edge(vertex_t a, vertex_t b) {
    const Edge e{a, b};
    if (e.v >= n()) throw data_error("edge endpoint " + std::to_string(e.v) + " out of range");
    if (has_edge(e.u, e.v)) {
      throw data_error("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    insert_sorted(adj_[e.u], e.v);
    insert_sorted(adj_[e.v], e.u);
    ++m_;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (vertex_t u = 0; u < n(); ++u)
      for (vertex_t v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  static void insert_sorted(std::vector<vertex_t>& list, vertex_t x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  }

  std::vector<std::vector<vertex_t>> adj_;
  std::size_t m_ = 0;
};

inline Graph build_graph(const EdgeStream& stream) {
  const std::size_t max_n = stream.max_label_plus_one();
  if (stream.n_hint && *stream.n_hint < max_n) {
    throw data_error("n_hint " + std::to_string(*stream.n_hint) + " is below max label + 1 = " +
                     std::to_string(max_n));
  }
  Graph g(stream.vertex_count());
  for (const Edge& e : stream.edges) g.add_edge(e.u, e.v);
  return g;
}

// Edges of g in seeded random order, with n_hint pinned to g.n().
inline EdgeStream to_stream(const Graph& g, std::uint64_t seed) {
  EdgeStream s{g.edges(), g.n()};
  std::mt19937_64 rng(seed);
  std::shuffle(s.edges.begin(), s.edges.end(), rng);
  return s;
}

}  // namespace gdstream
