#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gdstream/errors.hpp"
#include "gdstream/graph.hpp"
#include "gdstream/patterns.hpp"
#include "gdstream/vertex_features.hpp"

namespace gdstream {

// Brute-force ground truth for small graphs.

inline constexpr std::size_t kDefaultOracleLimit = 60;

namespace detail {

inline void check_oracle_size(const Graph& g, std::size_t limit) {
  if (g.n() > limit) {
    throw size_error("graph has " + std::to_string(g.n()) + " vertices, oracle limit is " +
                     std::to_string(limit));
  }
}

// Calls visit(order, mask) for every vertex subset of size 2, 3 and 4, with
// mask holding the induced edges in pair-bit order of the sorted subset.
template <typename Visit>
void for_each_small_subset(const Graph& g, Visit&& visit) {
  const auto n = static_cast<vertex_t>(g.n());
  for (vertex_t a = 0; a < n; ++a) {
    for (vertex_t b = a + 1; b < n; ++b) {
      const unsigned ab = g.has_edge(a, b) ? 1u : 0u;
      visit(2, ab);
      for (vertex_t c = b + 1; c < n; ++c) {
        // pair bits for k = 3: (0,1)=0 (0,2)=1 (1,2)=2
        const unsigned ac = g.has_edge(a, c) ? 1u : 0u;
        const unsigned bc = g.has_edge(b, c) ? 1u : 0u;
        visit(3, ab | ac << 1 | bc << 2);
        // pair bits for k = 4: (0,1)=0 (0,2)=1 (0,3)=2 (1,2)=3 (1,3)=4 (2,3)=5
        const unsigned base4 = ab | ac << 1 | bc << 3;
        for (vertex_t d = c + 1; d < n; ++d) {
          const unsigned mask = base4 | (g.has_edge(a, d) ? 1u : 0u) << 2 |
                                (g.has_edge(b, d) ? 1u : 0u) << 4 | (g.has_edge(c, d) ? 1u : 0u) << 5;
          visit(4, mask);
        }
      }
    }
  }
}

}  // namespace detail

// Number of induced subgraphs of g isomorphic to each pattern.
inline PatternCounts exact_induced_counts(const Graph& g, std::size_t limit = kDefaultOracleLimit) {
  detail::check_oracle_size(g, limit);
  std::array<std::uint64_t, kPatternCount> counts{};
  detail::for_each_small_subset(g, [&](int order, unsigned mask) { ++counts[index(classify(order, mask))]; });
  PatternCounts out{{}, CountKind::induced};
  for (std::size_t i = 0; i < kPatternCount; ++i) out.values[i] = static_cast<double>(counts[i]);
  return out;
}

// Number of (not necessarily induced) subgraphs of g isomorphic to each
// pattern: every edge subset of every induced subgraph on 2..4 vertices.
inline PatternCounts exact_subgraph_counts(const Graph& g, std::size_t limit = kDefaultOracleLimit) {
  detail::check_oracle_size(g, limit);
  std::array<std::uint64_t, kPatternCount> counts{};
  detail::for_each_small_subset(g, [&](int order, unsigned mask) {
    for (unsigned sub = mask;; sub = (sub - 1) & mask) {
      ++counts[index(classify(order, sub))];
      if (sub == 0) break;
    }
  });
  PatternCounts out{{}, CountKind::subgraph};
  for (std::size_t i = 0; i < kPatternCount; ++i) out.values[i] = static_cast<double>(counts[i]);
  return out;
}

// Features of v read off its explicitly built egonet.
inline VertexFeatures exact_vertex_features(const Graph& g, vertex_t v) {
  if (v >= g.n()) throw data_error("vertex " + std::to_string(v) + " out of range");
  const auto nbrs = g.neighbors(v);
  std::vector<vertex_t> ego(nbrs.begin(), nbrs.end());
  ego.push_back(v);
  std::sort(ego.begin(), ego.end());
  auto in_ego = [&ego](vertex_t x) { return std::binary_search(ego.begin(), ego.end(), x); };

  std::size_t inside = 0;
  std::size_t leaving = 0;
  std::size_t neighbor_degree_sum = 0;
  std::size_t neighbor_links = 0;
  for (vertex_t x : ego) {
    for (vertex_t y : g.neighbors(x)) {
      if (in_ego(y)) {
        if (x < y) ++inside;
      } else {
        ++leaving;
      }
    }
  }
  for (vertex_t u : nbrs) {
    neighbor_degree_sum += g.degree(u);
    for (vertex_t w : nbrs)
      if (u < w && g.has_edge(u, w)) ++neighbor_links;
  }

  const auto d = static_cast<double>(nbrs.size());
  VertexFeatures f;
  f.degree = d;
  f.clustering = nbrs.size() >= 2 ? static_cast<double>(neighbor_links) / (d * (d - 1.0) / 2.0) : 0.0;
  f.avg_neighbor_degree = nbrs.empty() ? 0.0 : static_cast<double>(neighbor_degree_sum) / d;
  f.egonet_edges = static_cast<double>(inside);
  f.egonet_boundary = static_cast<double>(leaving);
  return f;
}

struct VertexCounts {
  std::vector<std::uint64_t> triangles;  // triangles through v
  std::vector<std::uint64_t> paths;      // three-vertex paths with v as an end-point
};

// Per-vertex triangle and end-point three-path counts by walking every
// length-2 path out of each vertex.
inline VertexCounts exact_vertex_counts(const Graph& g) {
  VertexCounts c{std::vector<std::uint64_t>(g.n()), std::vector<std::uint64_t>(g.n())};
  for (vertex_t v = 0; v < g.n(); ++v) {
    std::uint64_t closed = 0;
    for (vertex_t u : g.neighbors(v)) {
      for (vertex_t w : g.neighbors(u)) {
        if (w == v) continue;
        ++c.paths[v];
        if (g.has_edge(v, w)) ++closed;
      }
    }
    // each triangle v-u-w is walked twice (via u and via w)
    c.triangles[v] = closed / 2;
  }
  return c;
}

}  // namespace gdstream
