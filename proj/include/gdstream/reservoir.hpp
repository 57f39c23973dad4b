#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gdstream/errors.hpp"
#include "gdstream/graph.hpp"

namespace gdstream {

// Probability that `extra_edges` particular edges among the first t - 1 are
// all held by a budget-b reservoir when edge t arrives:
//   min(1, prod_{i < extra_edges} (b - i) / (t - 1 - i)).
inline double detection_probability(std::uint64_t t, std::uint64_t b, std::uint64_t extra_edges) {
  if (t < 1 || b < 1 || extra_edges < 1) throw budget_error("detection_probability needs t, b, m >= 1");
  if (extra_edges > b) {
    throw budget_error("budget " + std::to_string(b) + " cannot hold the " + std::to_string(extra_edges) +
                       " edges a pattern needs");
  }
  if (t - 1 <= b) return 1.0;
  double p = 1.0;
  for (std::uint64_t i = 0; i < extra_edges; ++i)
    p *= static_cast<double>(b - i) / static_cast<double>(t - 1 - i);
  return p;
}

// Upper bound on the variance of a streamed subgraph-count estimate:
//   count^2 * prod_{i <= pattern_edges - 2} (total_edges - i) / (b - i).
// Zero in the exact regime b >= total_edges - 1.
inline double variance_bound(double count, std::uint64_t total_edges, std::uint64_t pattern_edges,
                             std::uint64_t b) {
  if (pattern_edges < 2) throw budget_error("variance_bound needs a pattern with at least two edges");
  if (b + 2 <= pattern_edges) {
    throw budget_error("budget " + std::to_string(b) + " too small for a " + std::to_string(pattern_edges) +
                       "-edge pattern");
  }
  if (count == 0.0 || b + 1 >= total_edges) return 0.0;
  double bound = count * count;
  for (std::uint64_t i = 0; i + 2 <= pattern_edges; ++i)
    bound *= static_cast<double>(total_edges - i) / static_cast<double>(b - i);
  return bound;
}

enum class SampleOutcome { kept, replaced, dropped };

// Fixed-budget uniform edge sample with a per-vertex sorted adjacency index.
class Reservoir {
 public:
  Reservoir(std::size_t budget, std::uint64_t seed) : budget_(budget), rng_(seed) {
    if (budget == 0) throw budget_error("reservoir budget must be positive");
    edges_.reserve(budget);
  }

  std::size_t budget() const noexcept { return budget_; }
  std::size_t size() const noexcept { return edges_.size(); }
  // Edges offered so far.
  std::uint64_t time() const noexcept { return t_; }
  std::size_t peak_size() const noexcept { return peak_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
    if (v >= adj_.size()) return {};
    return adj_[v];
  }

  bool contains(vertex_t a, vertex_t b) const noexcept {
    const auto na = neighbors(a);
    const auto nb = neighbors(b);
    // probe the shorter list
    return na.size() <= nb.size() ? std::binary_search(na.begin(), na.end(), b)
                                  : std::binary_search(nb.begin(), nb.end(), a);
  }

  // Offers the next stream edge: kept while t <= b, otherwise replaces a
  // uniformly chosen stored edge with probability b / t.
  SampleOutcome offer(Edge e) {
    ++t_;
    if (edges_.size() < budget_) {
      edges_.push_back(e);
      link(e);
      peak_ = std::max(peak_, edges_.size());
      return SampleOutcome::kept;
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, t_ - 1);
    const std::uint64_t slot = pick(rng_);
    if (slot >= budget_) return SampleOutcome::dropped;
    unlink(edges_[slot]);
    edges_[slot] = e;
    link(e);
    return SampleOutcome::replaced;
  }

 private:
  void link(Edge e) {
    if (adj_.size() <= e.v) adj_.resize(std::size_t{e.v} + 1);
    insert(adj_[e.u], e.v);
    insert(adj_[e.v], e.u);
  }

  void unlink(Edge e) {
    erase(adj_[e.u], e.v);
    erase(adj_[e.v], e.u);
  }

  static void insert(std::vector<vertex_t>& list, vertex_t x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  }

  static void erase(std::vector<vertex_t>& list, vertex_t x) {
    const auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) list.erase(it);
  }

  std::size_t budget_;
  std::mt19937_64 rng_;
  std::vector<Edge> edges_;
  std::vector<std::vector<vertex_t>> adj_;
  std::uint64_t t_ = 0;
  std::size_t peak_ = 0;
};

}  // namespace gdstream
