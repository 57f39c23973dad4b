#pragma once

#include <algorithm>
#include <array>
#include <cmath>
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
#include "gdstream/oracle.hpp"
#include "gdstream/reservoir.hpp"
#include "gdstream/vertex_features.hpp"

namespace gdstream {

inline constexpr std::size_t kMaeveMinBudget = 2;

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
};

// Population moments; skewness m3/s^3 and Pearson kurtosis m4/s^4, both 0
// when s = 0.
inline Moments moments(std::span<const double> values) {
  if (values.empty()) throw data_error("moments of an empty list");
  const auto n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double x : values) mean += x;
  mean /= n;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (double x : values) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  Moments out{mean, std::sqrt(m2), 0.0, 0.0};
  if (m2 > 0.0) {
    out.skewness = m3 / (m2 * out.stddev);
    out.kurtosis = m4 / (m2 * m2);
  }
  return out;
}

// Feature-major layout: (mean, std, skew, kurt) of degree, then clustering, ...
inline Descriptor make_maeve_descriptor(std::span<const VertexFeatures> features, std::uint64_t m) {
  Descriptor d;
  d.method = Method::maeve;
  d.values.assign(kMaeveDimension, 0.0);
  d.meta.n = features.size();
  d.meta.m = m;
  if (features.empty()) {
    d.degenerate = true;
    return d;
  }
  std::vector<double> column(features.size());
  for (std::size_t f = 0; f < VertexFeatures::size; ++f) {
    for (std::size_t v = 0; v < features.size(); ++v) column[v] = features[v].as_array()[f];
    const Moments mo = moments(column);
    d.values[4 * f + 0] = mo.mean;
    d.values[4 * f + 1] = mo.stddev;
    d.values[4 * f + 2] = mo.skewness;
    d.values[4 * f + 3] = mo.kurtosis;
  }
  return d;
}

// Oracle-derived MAEVE descriptor from explicit egonets.
inline Descriptor exact_maeve_descriptor(const Graph& g) {
  std::vector<VertexFeatures> features;
  features.reserve(g.n());
  for (vertex_t v = 0; v < g.n(); ++v) features.push_back(exact_vertex_features(g, v));
  return make_maeve_descriptor(features, g.m());
}

// MAEVE: per-vertex degree (exact), triangles through v and three-paths
// ending at v (both estimated from the reservoir, reweighted by the inverse
// detection probability when they close on the arriving edge).
class MaeveEstimator {
 public:
  MaeveEstimator(std::size_t budget, std::uint64_t seed, std::optional<std::size_t> n_hint = std::nullopt)
      : reservoir_(checked_budget(budget), seed), seed_(seed), n_hint_(n_hint) {}

  void process(Edge e) {
    const vertex_t u = e.u;
    const vertex_t v = e.v;
    grow(std::size_t{v} + 1);
    ++deg_[u];
    ++deg_[v];
    ++m_;

    const std::uint64_t t = reservoir_.time() + 1;
    const std::uint64_t b = reservoir_.budget();
    const double tri_w = 1.0 / detection_probability(t, b, 2);
    const double path_w = 1.0 / detection_probability(t, b, 1);

    const auto nu = reservoir_.neighbors(u);
    const auto nv = reservoir_.neighbors(v);
    // w - u - v: end-points v and w
    for (vertex_t w : nu) {
      if (w == v) continue;
      path_[v] += path_w;
      path_[w] += path_w;
      if (std::binary_search(nv.begin(), nv.end(), w)) {
        tri_[u] += tri_w;
        tri_[v] += tri_w;
        tri_[w] += tri_w;
      }
      ++work_;
    }
    // u - v - w: end-points u and w
    for (vertex_t w : nv) {
      if (w == u) continue;
      path_[u] += path_w;
      path_[w] += path_w;
      ++work_;
    }
    reservoir_.offer(e);
  }

  template <std::ranges::input_range R>
  void consume(R&& edges) {
    for (auto&& e : edges) process(e);
  }

  std::size_t vertex_count() const noexcept { return n_hint_ ? std::max(*n_hint_, deg_.size()) : deg_.size(); }
  std::uint64_t edge_count() const noexcept { return m_; }
  std::span<const std::uint64_t> degrees() const noexcept { return deg_; }
  std::span<const double> triangles() const noexcept { return tri_; }
  std::span<const double> paths() const noexcept { return path_; }
  const Reservoir& reservoir() const noexcept { return reservoir_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t work() const noexcept { return work_; }

  VertexFeatures features(vertex_t v) const {
    if (v >= deg_.size()) return {};
    return features_from_counts(static_cast<double>(deg_[v]), tri_[v], path_[v]);
  }

  Descriptor finalize() const { return finalize_with(tri_, path_); }

  Descriptor finalize_with(std::span<const double> tri, std::span<const double> path) const {
    std::vector<VertexFeatures> f(vertex_count());
    for (std::size_t v = 0; v < deg_.size(); ++v)
      f[v] = features_from_counts(static_cast<double>(deg_[v]), tri[v], path[v]);
    Descriptor d = make_maeve_descriptor(f, m_);
    d.meta.b = reservoir_.budget();
    d.meta.seed = seed_;
    return d;
  }

 private:
  static std::size_t checked_budget(std::size_t b) {
    if (b < kMaeveMinBudget) {
      throw budget_error("MAEVE needs a budget of at least " + std::to_string(kMaeveMinBudget) + " edges, got " +
                         std::to_string(b));
    }
    return b;
  }

  void grow(std::size_t n) {
    if (deg_.size() >= n) return;
    deg_.resize(n, 0);
    tri_.resize(n, 0.0);
    path_.resize(n, 0.0);
  }

  Reservoir reservoir_;
  std::uint64_t seed_;
  std::optional<std::size_t> n_hint_;
  std::vector<std::uint64_t> deg_;
  std::vector<double> tri_;
  std::vector<double> path_;
  std::uint64_t m_ = 0;
  std::uint64_t work_ = 0;
};

// Averages per-vertex triangle and path estimates across replicas that
// consumed the same stream; degrees come from the first replica.
inline Descriptor finalize_replicas(std::span<const MaeveEstimator> replicas) {
  if (replicas.empty()) throw data_error("finalize_replicas needs at least one replica");
  const std::size_t n = replicas.front().degrees().size();
  std::vector<double> tri(n, 0.0);
  std::vector<double> path(n, 0.0);
  for (const auto& r : replicas) {
    for (std::size_t v = 0; v < n; ++v) {
      tri[v] += r.triangles()[v];
      path[v] += r.paths()[v];
    }
  }
  const auto w = static_cast<double>(replicas.size());
  for (std::size_t v = 0; v < n; ++v) {
    tri[v] /= w;
    path[v] /= w;
  }
  return replicas.front().finalize_with(tri, path);
}

}  // namespace gdstream
