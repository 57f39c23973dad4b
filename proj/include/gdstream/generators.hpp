#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gdstream/dataset.hpp"
#include "gdstream/graph.hpp"
#include "gdstream/math.hpp"

namespace gdstream {

// G(n, p): every pair independently with probability p.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  Graph g(n);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Preferential attachment: starts from a star on attach + 1 vertices, then
// each new vertex links to `attach` distinct vertices drawn proportionally to
// degree.
inline Graph barabasi_albert(std::size_t n, std::size_t attach, std::uint64_t seed) {
  Graph g(n);
  if (n == 0 || attach == 0) return g;
  std::mt19937_64 rng(seed);
  std::vector<vertex_t> ends;  // each vertex once per incident edge
  const std::size_t core = std::min(n, attach + 1);
  for (vertex_t v = 1; v < core; ++v) {
    g.add_edge(0, v);
    ends.push_back(0);
    ends.push_back(v);
  }
  std::vector<vertex_t> targets;
  for (auto v = static_cast<vertex_t>(core); v < n; ++v) {
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
    while (targets.size() < attach) {
      const vertex_t w = ends[pick(rng)];
      if (std::find(targets.begin(), targets.end(), w) == targets.end()) targets.push_back(w);
    }
    for (vertex_t w : targets) {
      g.add_edge(v, w);
      ends.push_back(v);
      ends.push_back(w);
    }
  }
  return g;
}

// Two-class synthetic set: label 0 is G(n, p), label 1 is preferential
// attachment with `attach` picked so the expected edge count matches. Sizes n
// are uniform in [n_min, n_max].
inline Dataset er_vs_ba_dataset(std::size_t per_class, std::size_t n_min, std::size_t n_max, double p,
                                std::uint64_t seed) {
  Dataset ds;
  ds.name = "er_vs_ba";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(n_min, n_max);
  for (int label = 0; label < 2; ++label) {
    for (std::size_t i = 0; i < per_class; ++i) {
      const std::size_t n = size(rng);
      const std::uint64_t graph_seed = rng();
      Graph g;
      if (label == 0) {
        g = erdos_renyi(n, p, graph_seed);
      } else {
        const double half_degree = p * static_cast<double>(n - 1) / 2.0;
        g = barabasi_albert(n, static_cast<std::size_t>(std::max(1.0, std::round(half_degree))), graph_seed);
      }
      ds.graphs.push_back(to_stream(g, derive_seed(seed, ds.graphs.size())));
      ds.labels.push_back(label);
    }
  }
  return ds;
}

}  // namespace gdstream
