#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>

namespace gdstream {

// The 17 graphs on 2, 3 and 4 vertices. Canonical order: by order, then edge
// count; equal edge counts follow the declaration order below.
enum class Pattern : std::uint8_t {
  edgeless2,
  edge,
  edgeless3,
  edge_isolated,
  wedge,
  triangle,
  edgeless4,
  edge_2isolated,
  two_edges,
  wedge_isolated,
  triangle_isolated,
  claw,
  path4,
  cycle4,
  paw,
  diamond,
  k4,
};

inline constexpr std::size_t kPatternCount = 17;

constexpr std::size_t index(Pattern p) noexcept { return static_cast<std::size_t>(p); }
// 1-based id used in reports.
constexpr int pattern_id(Pattern p) noexcept { return static_cast<int>(p) + 1; }

struct PatternInfo {
  Pattern pattern;
  std::string_view name;
  int order;
  int edge_count;
  bool connected;
  std::array<std::pair<std::uint8_t, std::uint8_t>, 6> edges;
};

inline constexpr std::array<PatternInfo, kPatternCount> kCatalog{{
    {Pattern::edgeless2, "edgeless-2", 2, 0, false, {}},
    {Pattern::edge, "edge", 2, 1, true, {{{0, 1}}}},
    {Pattern::edgeless3, "edgeless-3", 3, 0, false, {}},
    {Pattern::edge_isolated, "edge+isolated", 3, 1, false, {{{0, 1}}}},
    {Pattern::wedge, "wedge", 3, 2, true, {{{0, 1}, {1, 2}}}},
    {Pattern::triangle, "triangle", 3, 3, true, {{{0, 1}, {1, 2}, {0, 2}}}},
    {Pattern::edgeless4, "edgeless-4", 4, 0, false, {}},
    {Pattern::edge_2isolated, "edge+2-isolated", 4, 1, false, {{{0, 1}}}},
    {Pattern::two_edges, "two-disjoint-edges", 4, 2, false, {{{0, 1}, {2, 3}}}},
    {Pattern::wedge_isolated, "wedge+isolated", 4, 2, false, {{{0, 1}, {1, 2}}}},
    {Pattern::triangle_isolated, "triangle+isolated", 4, 3, false, {{{0, 1}, {1, 2}, {0, 2}}}},
    {Pattern::claw, "claw", 4, 3, true, {{{0, 1}, {0, 2}, {0, 3}}}},
    {Pattern::path4, "path-4", 4, 3, true, {{{0, 1}, {1, 2}, {2, 3}}}},
    {Pattern::cycle4, "cycle-4", 4, 4, true, {{{0, 1}, {1, 2}, {2, 3}, {0, 3}}}},
    {Pattern::paw, "paw", 4, 4, true, {{{0, 1}, {1, 2}, {0, 2}, {2, 3}}}},
    {Pattern::diamond, "diamond", 4, 5, true, {{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}}},
    {Pattern::k4, "K4", 4, 6, true, {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}}},
}};

constexpr const PatternInfo& info(Pattern p) noexcept { return kCatalog[index(p)]; }

// First pattern index of each order block, and block length.
constexpr std::size_t block_begin(int order) noexcept { return order == 2 ? 0 : order == 3 ? 2 : 6; }
constexpr std::size_t block_size(int order) noexcept { return order == 2 ? 2 : order == 3 ? 4 : 11; }

namespace detail {

// Bit position of vertex pair (i, j), i < j, among the k(k-1)/2 pairs of a
// k-vertex set in lexicographic order.
constexpr int pair_bit(int k, int i, int j) noexcept {
  int bit = 0;
  for (int a = 0; a < i; ++a) bit += k - 1 - a;
  return bit + (j - i - 1);
}

constexpr int pair_count(int k) noexcept { return k * (k - 1) / 2; }

// Sorted (descending) degree sequence packed base 8; together with the order
// it identifies every graph on at most four vertices.
constexpr std::uint32_t fingerprint(int k, unsigned mask) noexcept {
  std::array<int, 4> deg{};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (mask >> pair_bit(k, i, j) & 1u) {
        ++deg[i];
        ++deg[j];
      }
  std::sort(deg.begin(), deg.begin() + k, [](int a, int b) { return a > b; });
  std::uint32_t code = 0;
  for (int i = 0; i < k; ++i) code = code * 8 + static_cast<std::uint32_t>(deg[i]);
  return code;
}

constexpr unsigned pattern_mask(const PatternInfo& p) noexcept {
  unsigned mask = 0;
  for (int e = 0; e < p.edge_count; ++e) {
    const auto [a, b] = p.edges[e];
    mask |= 1u << pair_bit(p.order, a, b);
  }
  return mask;
}

template <int K>
constexpr auto make_classifier() {
  std::array<Pattern, (1u << pair_count(K))> table{};
  for (unsigned mask = 0; mask < table.size(); ++mask) {
    const auto code = fingerprint(K, mask);
    bool found = false;
    for (const auto& p : kCatalog) {
      if (p.order == K && fingerprint(K, pattern_mask(p)) == code) {
        table[mask] = p.pattern;
        found = true;
      }
    }
    if (!found) throw "unclassified mask";
  }
  return table;
}

inline constexpr auto kClassify2 = make_classifier<2>();
inline constexpr auto kClassify3 = make_classifier<3>();
inline constexpr auto kClassify4 = make_classifier<4>();

}  // namespace detail

// Pattern of the graph on `order` labelled vertices whose edges are the set
// bits of `mask` (pair bits in lexicographic pair order).
constexpr Pattern classify(int order, unsigned mask) noexcept {
  switch (order) {
    case 2: return detail::kClassify2[mask & 0x1u];
    case 3: return detail::kClassify3[mask & 0x7u];
    default: return detail::kClassify4[mask & 0x3fu];
  }
}

using OverlapMatrix = std::array<std::array<std::int64_t, kPatternCount>, kPatternCount>;

// O(i, j): number of subgraphs of pattern j on all of its vertices that are
// isomorphic to pattern i. Enumerates every edge subset of every pattern.
constexpr OverlapMatrix overlap_matrix() noexcept {
  OverlapMatrix o{};
  for (const auto& host : kCatalog) {
    const unsigned full = detail::pattern_mask(host);
    // Walk all submasks of `full`, including 0.
    for (unsigned sub = full;; sub = (sub - 1) & full) {
      ++o[index(classify(host.order, sub))][index(host.pattern)];
      if (sub == 0) break;
    }
  }
  return o;
}

inline constexpr OverlapMatrix kOverlap = overlap_matrix();

static_assert(kOverlap[index(Pattern::wedge)][index(Pattern::triangle)] == 3);
static_assert(kOverlap[index(Pattern::edgeless3)][index(Pattern::triangle)] == 1);

enum class CountKind { subgraph, induced };

// 17 counts in canonical pattern order.
struct PatternCounts {
  std::array<double, kPatternCount> values{};
  CountKind kind = CountKind::subgraph;

  double& operator[](Pattern p) noexcept { return values[index(p)]; }
  double operator[](Pattern p) const noexcept { return values[index(p)]; }
};

// Solves O x = subgraph for x by back-substitution (O is unit upper
// triangular and block diagonal by order).
inline PatternCounts induced_from_subgraph(const PatternCounts& subgraph) {
  PatternCounts induced{{}, CountKind::induced};
  for (std::size_t i = kPatternCount; i-- > 0;) {
    double x = subgraph.values[i];
    for (std::size_t j = i + 1; j < kPatternCount; ++j) {
      if (kOverlap[i][j] != 0) x -= static_cast<double>(kOverlap[i][j]) * induced.values[j];
    }
    induced.values[i] = x;
  }
  return induced;
}

inline PatternCounts subgraph_from_induced(const PatternCounts& induced) {
  PatternCounts subgraph{{}, CountKind::subgraph};
  for (std::size_t i = 0; i < kPatternCount; ++i) {
    double x = 0.0;
    for (std::size_t j = 0; j < kPatternCount; ++j)
      x += static_cast<double>(kOverlap[i][j]) * induced.values[j];
    subgraph.values[i] = x;
  }
  return subgraph;
}

}  // namespace gdstream
