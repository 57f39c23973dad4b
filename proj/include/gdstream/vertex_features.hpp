#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "gdstream/math.hpp"

namespace gdstream {

// Per-vertex structural features aggregated by MAEVE, in descriptor order.
struct VertexFeatures {
  double degree = 0.0;
  double clustering = 0.0;
  double avg_neighbor_degree = 0.0;
  double egonet_edges = 0.0;
  double egonet_boundary = 0.0;

  static constexpr std::size_t size = 5;
  static constexpr std::array<std::string_view, size> names{
      "degree", "clustering", "avg_neighbor_degree", "egonet_edges", "egonet_boundary"};

  std::array<double, size> as_array() const noexcept {
    return {degree, clustering, avg_neighbor_degree, egonet_edges, egonet_boundary};
  }

  friend bool operator==(const VertexFeatures&, const VertexFeatures&) = default;
};

// Features from degree d, triangles-through-v t and three-paths-ending-at-v p.
// Clustering is 0 for d < 2 and the neighbour degree average is 0 for d = 0.
// Estimated inputs are not clamped, so results may leave the exact range.
constexpr VertexFeatures features_from_counts(double d, double t, double p) noexcept {
  VertexFeatures f;
  f.degree = d;
  f.clustering = d >= 2.0 ? t / choose(d, 2) : 0.0;
  // 1 + p / d, written so exact integer inputs give an exact quotient
  f.avg_neighbor_degree = d > 0.0 ? (d + p) / d : 0.0;
  f.egonet_edges = d + t;
  f.egonet_boundary = p - 2.0 * t;
  return f;
}

}  // namespace gdstream
