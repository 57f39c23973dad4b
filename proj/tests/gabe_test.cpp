#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "brute_force.hpp"
#include "gdstream/gabe.hpp"
#include "gdstream/generators.hpp"

namespace gdstream {
namespace {

using testing::claw_graph;
using testing::complete_graph;
using testing::make_graph;

EdgeStream stream_of(std::initializer_list<Edge> edges) { return EdgeStream{edges, {}}; }

TEST(Gabe, RejectsSmallBudget) {
  EXPECT_THROW(GabeEstimator(4, 0), budget_error);
  EXPECT_NO_THROW(GabeEstimator(5, 0));
}

TEST(Gabe, TriangleExactRegime) {
  GabeEstimator est(5, 1);
  est.consume(stream_of({Edge(0, 1), Edge(1, 2), Edge(0, 2)}));
  EXPECT_EQ(est.estimate(Pattern::triangle), 1.0);
}

TEST(Gabe, K4ExactRegime) {
  GabeEstimator est(6, 1);
  est.consume(to_stream(complete_graph(4), 3).edges);
  EXPECT_EQ(est.estimate(Pattern::triangle), 4);
  EXPECT_EQ(est.estimate(Pattern::path4), 12);
  EXPECT_EQ(est.estimate(Pattern::cycle4), 3);
  EXPECT_EQ(est.estimate(Pattern::paw), 12);
  EXPECT_EQ(est.estimate(Pattern::diamond), 6);
  EXPECT_EQ(est.estimate(Pattern::k4), 1);
  EXPECT_THROW(est.estimate(Pattern::claw), data_error);
}

TEST(Gabe, ExactRegimeMatchesOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = erdos_renyi(8 + seed % 7, 0.25 + 0.1 * static_cast<double>(seed % 5), seed);
    const EdgeStream s = to_stream(g, seed * 31 + 1);
    GabeEstimator est(std::max<std::size_t>(g.m(), kGabeMinBudget), seed, s.n_hint);
    est.consume(s.edges);
    const auto oracle = exact_subgraph_counts(g);
    for (Pattern p : kStreamPatterns) EXPECT_EQ(est.estimate(p), oracle[p]) << info(p).name;
    EXPECT_EQ(est.subgraph_counts().values, oracle.values);
  }
}

TEST(ClosedForms, Triangle) {
  const std::vector<std::uint64_t> deg{2, 2, 2};
  const auto h = closed_form_counts(3, 3, deg, 1.0);
  EXPECT_EQ(h[Pattern::wedge], 3);
  EXPECT_EQ(h[Pattern::two_edges], 0);
  EXPECT_EQ(h[Pattern::edge_isolated], 3);
}

TEST(ClosedForms, SingleEdge) {
  const std::vector<std::uint64_t> deg{1, 1};
  const auto h = closed_form_counts(2, 1, deg, 0.0);
  EXPECT_EQ(h[Pattern::edge], 1);
  EXPECT_EQ(h[Pattern::edgeless2], 1);
  EXPECT_EQ(h[Pattern::wedge], 0);
  for (std::size_t i = block_begin(3); i < kPatternCount; ++i) EXPECT_EQ(h.values[i], 0.0) << i;
  EXPECT_FALSE(std::signbit(h[Pattern::triangle_isolated]));
}

TEST(ClosedForms, Claw) {
  const Graph g = claw_graph();
  const std::vector<std::uint64_t> deg{3, 1, 1, 1};
  const auto h = closed_form_counts(4, 3, deg, 0.0);
  EXPECT_EQ(h[Pattern::claw], 1);
  EXPECT_EQ(h[Pattern::wedge], 3);
  EXPECT_EQ(h[Pattern::claw], exact_subgraph_counts(g)[Pattern::claw]);
}

TEST(GabeFinalize, TriangleDescriptor) {
  GabeEstimator est(5, 2);
  est.consume(stream_of({Edge(0, 1), Edge(1, 2), Edge(0, 2)}));
  const Descriptor d = est.finalize();
  ASSERT_EQ(d.values.size(), 17u);
  const std::vector<double> expected{0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(d.values[i], expected[i], 1e-12) << i;
  EXPECT_EQ(d.meta.n, 3u);
  EXPECT_EQ(d.meta.m, 3u);
  EXPECT_EQ(d.meta.b, 5u);
}

TEST(GabeFinalize, PathDescriptor) {
  GabeEstimator est(5, 2);
  est.consume(stream_of({Edge(1, 2), Edge(0, 1)}));
  const Descriptor d = est.finalize();
  EXPECT_NEAR(d.values[0], 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(d.values[1], 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(d.values[index(Pattern::wedge)], 1.0, 1e-12);
  EXPECT_NEAR(d.values[index(Pattern::edgeless3)], 0.0, 1e-12);
}

TEST(GabeFinalize, DegenerateGraph) {
  GabeEstimator est(5, 2);
  const Descriptor d = est.finalize();
  EXPECT_TRUE(d.degenerate);
  for (double x : d.values) EXPECT_EQ(x, 0.0);
}

TEST(GabeFinalize, NHintAddsIsolatedVertices) {
  GabeEstimator est(5, 2, std::size_t{4});
  est.consume(stream_of({Edge(0, 1)}));
  const Descriptor d = est.finalize();
  EXPECT_EQ(d.meta.n, 4u);
  const Descriptor oracle = exact_gabe_descriptor(make_graph(4, {{0, 1}}));
  for (std::size_t i = 0; i < 17; ++i) EXPECT_NEAR(d.values[i], oracle.values[i], 1e-12);
}

double block_sum(const Descriptor& d, int order) {
  return std::accumulate(d.values.begin() + static_cast<std::ptrdiff_t>(block_begin(order)),
                         d.values.begin() + static_cast<std::ptrdiff_t>(block_begin(order) + block_size(order)), 0.0);
}

TEST(GabeFinalize, BlocksSumToOneUnderHeavySampling) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = erdos_renyi(40, 0.2, seed);
    GabeEstimator est(8, seed);
    est.consume(to_stream(g, seed).edges);
    const Descriptor d = est.finalize();
    for (int k = 2; k <= 4; ++k) EXPECT_NEAR(block_sum(d, k), 1.0, 1e-9);
  }
}

TEST(GabeFinalize, PermutationInvariantInExactRegime) {
  const Graph g = erdos_renyi(12, 0.4, 5);
  const Graph p = testing::permuted(g, 99);
  GabeEstimator a(g.m(), 1, g.n());
  GabeEstimator b(g.m(), 2, g.n());
  a.consume(to_stream(g, 1).edges);
  b.consume(to_stream(p, 2).edges);
  const auto da = a.finalize();
  const auto db = b.finalize();
  for (std::size_t i = 0; i < 17; ++i) EXPECT_NEAR(da.values[i], db.values[i], 1e-12);
}

TEST(Gabe, ReplicaAverageOfOneIsIdentity) {
  const Graph g = erdos_renyi(25, 0.3, 7);
  GabeEstimator est(20, 17);
  est.consume(to_stream(g, 4).edges);
  const std::vector<GabeEstimator> one{est};
  EXPECT_EQ(finalize_replicas(std::span<const GabeEstimator>(one)).values, est.finalize().values);
}

TEST(Gabe, ReservoirStaysWithinBudget) {
  const Graph g = erdos_renyi(50, 0.2, 3);
  GabeEstimator est(30, 1);
  est.consume(to_stream(g, 8).edges);
  EXPECT_EQ(est.reservoir().peak_size(), 30u);
  EXPECT_EQ(est.reservoir().time(), g.m());
}

TEST(Gabe, PerEdgeWorkDependsOnBudgetNotStreamLength) {
  // Same average degree, twice the vertices: the stream doubles, the sample
  // thins, so total work may at most double (with 30% slack).
  constexpr std::size_t kBudget = 60;
  double work_small = 0;
  double work_large = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph small = erdos_renyi(200, 0.05, seed);
    const Graph large = erdos_renyi(400, 0.025, seed + 100);
    GabeEstimator a(kBudget, seed);
    GabeEstimator b(kBudget, seed);
    a.consume(to_stream(small, seed).edges);
    b.consume(to_stream(large, seed).edges);
    work_small += static_cast<double>(a.work()) / static_cast<double>(small.m());
    work_large += static_cast<double>(b.work()) / static_cast<double>(large.m());
  }
  EXPECT_LE(work_large, 1.3 * work_small);
}

TEST(Gabe, UnbiasedWhenDetectionsAreCommon) {
  const Graph g = erdos_renyi(30, 0.2, 1);
  const EdgeStream s = to_stream(g, 1);
  const auto oracle = exact_subgraph_counts(g);
  constexpr std::size_t kRuns = 3000;
  std::array<double, 6> sum{};
  std::array<double, 6> sq{};
  for (std::size_t r = 0; r < kRuns; ++r) {
    GabeEstimator est(45, 7000 + r, s.n_hint);
    est.consume(s.edges);
    for (std::size_t i = 0; i < 6; ++i) {
      sum[i] += est.estimates()[i];
      sq[i] += est.estimates()[i] * est.estimates()[i];
    }
  }
  for (std::size_t i = 0; i < 6; ++i) {
    const double mean = sum[i] / kRuns;
    const double se = std::sqrt((sq[i] / kRuns - mean * mean) / (kRuns - 1));
    EXPECT_NEAR(mean, oracle[kStreamPatterns[i]], 4 * se) << info(kStreamPatterns[i]).name;
  }
}

}  // namespace
}  // namespace gdstream
