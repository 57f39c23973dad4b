#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "gdstream/descriptor.hpp"
#include "gdstream/errors.hpp"
#include "gdstream/graph.hpp"
#include "gdstream/math.hpp"
#include "gdstream/oracle.hpp"
#include "gdstream/patterns.hpp"
#include "gdstream/reservoir.hpp"

namespace gdstream {

// GABE: normalised induced counts of all graphs on 2, 3 and 4 vertices.
//
// Degrees, |E| and |V| are tracked exactly, which pins eleven of the
// seventeen subgraph counts by closed forms. Triangle, path-4, cycle-4, paw,
// diamond and K4 are estimated from the reservoir: every copy is found when
// its last edge arrives and weighted by the inverse probability that its
// other edges survived in the sample. Induced counts follow by inverting the
// overlap matrix, so estimated induced counts may be negative.

inline constexpr std::size_t kGabeMinBudget = 5;

// Patterns estimated from the stream, in slot order.
inline constexpr std::array<Pattern, 6> kStreamPatterns{Pattern::triangle, Pattern::path4, Pattern::cycle4,
                                                       Pattern::paw,      Pattern::diamond, Pattern::k4};

namespace detail {

// For a 4-vertex set (u, v, x, y) with the arriving edge (u, v) on bit 0:
// how many subgraphs of each streamed 4-vertex pattern contain bit 0, indexed
// by the other five pair bits.
constexpr auto make_edge_centric_table() {
  std::array<std::array<std::uint8_t, kStreamPatterns.size()>, 32> table{};
  for (unsigned rest = 0; rest < 32; ++rest) {
    const unsigned mask = rest << 1 | 1u;
    for (unsigned sub = mask;; sub = (sub - 1) & mask) {
      if (sub & 1u) {
        const Pattern p = classify(4, sub);
        for (std::size_t s = 1; s < kStreamPatterns.size(); ++s)
          if (kStreamPatterns[s] == p) ++table[rest][s];
      }
      if (sub == 0) break;
    }
  }
  return table;
}

inline constexpr auto kEdgeCentric = make_edge_centric_table();

static_assert(kEdgeCentric[31][5] == 1);  // K4 contains itself once
static_assert(kEdgeCentric[31][4] == 5);  // K4 minus any of the five other edges

}  // namespace detail

// The eleven Table-style closed-form subgraph counts; the six streamed
// entries are left at zero apart from triangle+isolated, which scales the
// supplied triangle count.
inline PatternCounts closed_form_counts(std::size_t n, std::uint64_t m, std::span<const std::uint64_t> degrees,
                                        double triangles) {
  double wedges = 0.0;
  double claws = 0.0;
  for (std::uint64_t d : degrees) {
    wedges += choose(static_cast<double>(d), 2);
    claws += choose(static_cast<double>(d), 3);
  }
  const auto nv = static_cast<double>(n);
  const auto me = static_cast<double>(m);
  auto above = [nv](double k) { return nv > k ? nv - k : 0.0; };

  PatternCounts h{{}, CountKind::subgraph};
  h[Pattern::edgeless2] = choose(nv, 2);
  h[Pattern::edge] = me;
  h[Pattern::edgeless3] = choose(nv, 3);
  h[Pattern::edge_isolated] = me * above(2);
  h[Pattern::wedge] = wedges;
  h[Pattern::edgeless4] = choose(nv, 4);
  h[Pattern::edge_2isolated] = me * choose(above(2), 2);
  h[Pattern::two_edges] = choose(me, 2) - wedges;
  h[Pattern::wedge_isolated] = wedges * above(3);
  h[Pattern::triangle_isolated] = triangles * above(3);
  h[Pattern::claw] = claws;
  return h;
}

// Concatenated per-order blocks of induced counts divided by C(n, k); a block
// with C(n, k) = 0 is all zeros.
inline std::vector<double> normalize_induced(const PatternCounts& induced, std::size_t n) {
  std::vector<double> phi(kPatternCount, 0.0);
  for (int order = 2; order <= 4; ++order) {
    const double total = choose(static_cast<double>(n), order);
    if (total == 0.0) continue;
    const std::size_t first = block_begin(order);
    for (std::size_t i = first; i < first + block_size(order); ++i) phi[i] = induced.values[i] / total;
  }
  return phi;
}

inline Descriptor make_gabe_descriptor(const PatternCounts& subgraph, std::size_t n, std::uint64_t m) {
  Descriptor d;
  d.method = Method::gabe;
  d.values = normalize_induced(induced_from_subgraph(subgraph), n);
  d.meta.n = n;
  d.meta.m = m;
  d.degenerate = n < 2;
  return d;
}

// Oracle-derived GABE descriptor.
inline Descriptor exact_gabe_descriptor(const Graph& g, std::size_t oracle_limit = kDefaultOracleLimit) {
  Descriptor d;
  d.method = Method::gabe;
  d.values = normalize_induced(exact_induced_counts(g, oracle_limit), g.n());
  d.meta.n = g.n();
  d.meta.m = g.m();
  d.degenerate = g.n() < 2;
  return d;
}

class GabeEstimator {
 public:
  GabeEstimator(std::size_t budget, std::uint64_t seed, std::optional<std::size_t> n_hint = std::nullopt)
      : reservoir_(checked_budget(budget), seed), seed_(seed), n_hint_(n_hint) {}

  void process(Edge e) {
    if (degrees_.size() <= e.v) degrees_.resize(std::size_t{e.v} + 1, 0);
    ++degrees_[e.u];
    ++degrees_[e.v];
    ++m_;
    count_at_arrival(e);
    reservoir_.offer(e);
  }

  template <std::ranges::input_range R>
  void consume(R&& edges) {
    for (auto&& e : edges) process(e);
  }

  // Running estimate of the subgraph count of a streamed pattern.
  double estimate(Pattern p) const {
    for (std::size_t s = 0; s < kStreamPatterns.size(); ++s)
      if (kStreamPatterns[s] == p) return est_[s];
    throw data_error(std::string(info(p).name) + " is not a streamed pattern");
  }
  const std::array<double, 6>& estimates() const noexcept { return est_; }

  std::size_t vertex_count() const noexcept {
    return n_hint_ ? std::max(*n_hint_, degrees_.size()) : degrees_.size();
  }
  std::uint64_t edge_count() const noexcept { return m_; }
  std::span<const std::uint64_t> degrees() const noexcept { return degrees_; }
  const Reservoir& reservoir() const noexcept { return reservoir_; }
  std::uint64_t seed() const noexcept { return seed_; }
  // Vertex sets and candidate triangles examined so far.
  std::uint64_t work() const noexcept { return work_; }

  // Subgraph counts from the closed forms plus the given streamed estimates.
  PatternCounts subgraph_counts(const std::array<double, 6>& streamed) const {
    PatternCounts h = closed_form_counts(vertex_count(), m_, degrees_, streamed[0]);
    for (std::size_t s = 0; s < kStreamPatterns.size(); ++s) h[kStreamPatterns[s]] = streamed[s];
    return h;
  }
  PatternCounts subgraph_counts() const { return subgraph_counts(est_); }

  Descriptor finalize() const { return finalize_with(est_); }

  Descriptor finalize_with(const std::array<double, 6>& streamed) const {
    Descriptor d = make_gabe_descriptor(subgraph_counts(streamed), vertex_count(), m_);
    d.meta.b = reservoir_.budget();
    d.meta.seed = seed_;
    return d;
  }

 private:
  static std::size_t checked_budget(std::size_t b) {
    if (b < kGabeMinBudget) {
      throw budget_error("GABE needs a budget of at least " + std::to_string(kGabeMinBudget) + " edges, got " +
                         std::to_string(b));
    }
    return b;
  }

  void count_at_arrival(Edge e) {
    const vertex_t u = e.u;
    const vertex_t v = e.v;
    const std::uint64_t t = reservoir_.time() + 1;
    const std::uint64_t b = reservoir_.budget();
    // weights indexed by the number of other pattern edges that must survive
    std::array<double, 6> weight{};
    for (std::uint64_t k = 2; k <= 5; ++k) weight[k] = 1.0 / detection_probability(t, b, k);

    const auto nu = reservoir_.neighbors(u);
    const auto nv = reservoir_.neighbors(v);

    // triangles closing on (u, v)
    std::size_t closed = 0;
    {
      auto i = nu.begin();
      auto j = nv.begin();
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++closed;
          ++i;
          ++j;
        }
        ++work_;
      }
    }
    est_[0] += static_cast<double>(closed) * weight[2];

    // 4-vertex sets {u, v, x, y} whose sampled edges plus (u, v) can be
    // connected: x, y both adjacent to u or v, or x adjacent and y adjacent
    // to x only.
    frontier_.clear();
    std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(frontier_));
    std::erase_if(frontier_, [u, v](vertex_t w) { return w == u || w == v; });

    std::array<double, 6> found{};
    auto visit = [&](vertex_t x, vertex_t y) {
      ++work_;
      const unsigned rest = (reservoir_.contains(u, x) ? 1u : 0u) | (reservoir_.contains(u, y) ? 2u : 0u) |
                            (reservoir_.contains(v, x) ? 4u : 0u) | (reservoir_.contains(v, y) ? 8u : 0u) |
                            (reservoir_.contains(x, y) ? 16u : 0u);
      const auto& row = detail::kEdgeCentric[rest];
      for (std::size_t s = 1; s < row.size(); ++s) found[s] += row[s];
    };
    for (std::size_t i = 0; i < frontier_.size(); ++i)
      for (std::size_t j = i + 1; j < frontier_.size(); ++j) visit(frontier_[i], frontier_[j]);
    for (vertex_t x : frontier_) {
      for (vertex_t y : reservoir_.neighbors(x)) {
        if (y == u || y == v || std::binary_search(frontier_.begin(), frontier_.end(), y)) continue;
        visit(x, y);
      }
    }

    est_[1] += found[1] * weight[2];  // path-4
    est_[2] += found[2] * weight[3];  // cycle-4
    est_[3] += found[3] * weight[3];  // paw
    est_[4] += found[4] * weight[4];  // diamond
    est_[5] += found[5] * weight[5];  // K4
  }

  Reservoir reservoir_;
  std::uint64_t seed_;
  std::optional<std::size_t> n_hint_;
  std::vector<std::uint64_t> degrees_;
  std::uint64_t m_ = 0;
  std::array<double, 6> est_{};
  std::uint64_t work_ = 0;
  std::vector<vertex_t> frontier_;
};

// Averages the streamed estimates of independent replicas that consumed the
// same stream, then assembles one descriptor. Exact quantities come from the
// first replica.
inline Descriptor finalize_replicas(std::span<const GabeEstimator> replicas) {
  if (replicas.empty()) throw data_error("finalize_replicas needs at least one replica");
  std::array<double, 6> mean{};
  for (const auto& r : replicas)
    for (std::size_t s = 0; s < mean.size(); ++s) mean[s] += r.estimates()[s];
  for (double& x : mean) x /= static_cast<double>(replicas.size());
  return replicas.front().finalize_with(mean);
}

}  // namespace gdstream
