#include <gtest/gtest.h>

#include <cmath>

#include "brute_force.hpp"
#include "gdstream/generators.hpp"
#include "gdstream/maeve.hpp"

namespace gdstream {
namespace {

using testing::claw_graph;
using testing::complete_graph;

TEST(Moments, Constant) {
  const std::vector<double> xs{4.5, 4.5, 4.5};
  const Moments m = moments(xs);
  EXPECT_EQ(m.mean, 4.5);
  EXPECT_EQ(m.stddev, 0.0);
  EXPECT_EQ(m.skewness, 0.0);
  EXPECT_EQ(m.kurtosis, 0.0);
}

TEST(Moments, Examples) {
  const std::vector<double> a{0, 0, 1, 1};
  const Moments ma = moments(a);
  EXPECT_DOUBLE_EQ(ma.mean, 0.5);
  EXPECT_DOUBLE_EQ(ma.stddev, 0.5);
  EXPECT_NEAR(ma.skewness, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(ma.kurtosis, 1.0);

  const std::vector<double> b{1, 2, 3};
  const Moments mb = moments(b);
  EXPECT_DOUBLE_EQ(mb.mean, 2.0);
  EXPECT_DOUBLE_EQ(mb.stddev, std::sqrt(2.0 / 3.0));
  EXPECT_NEAR(mb.skewness, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(mb.kurtosis, 1.5);

  EXPECT_THROW(moments(std::vector<double>{}), data_error);
}

TEST(Maeve, RejectsTinyBudget) {
  EXPECT_THROW(MaeveEstimator(1, 0), budget_error);
  EXPECT_NO_THROW(MaeveEstimator(2, 0));
}

TEST(Maeve, TriangleStream) {
  MaeveEstimator est(3, 1);
  est.consume(std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(0, 2)});
  for (vertex_t v = 0; v < 3; ++v) {
    EXPECT_EQ(est.triangles()[v], 1.0);
    // v is an end-point of the two three-paths through the other vertices
    EXPECT_EQ(est.paths()[v], 2.0);
  }
}

TEST(Maeve, ClawAnyOrder) {
  const std::vector<Edge> edges{Edge(0, 1), Edge(0, 2), Edge(0, 3)};
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto shuffled = edges;
    std::mt19937_64 rng(seed);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    MaeveEstimator est(3, seed);
    est.consume(shuffled);
    EXPECT_EQ(est.paths()[0], 0.0);
    for (vertex_t leaf = 1; leaf < 4; ++leaf) EXPECT_EQ(est.paths()[leaf], 2.0);
    for (vertex_t v = 0; v < 4; ++v) EXPECT_EQ(est.triangles()[v], 0.0);
    EXPECT_EQ(est.features(0), (VertexFeatures{3, 0, 1, 3, 0}));
    EXPECT_EQ(est.features(1), (VertexFeatures{1, 0, 3, 1, 2}));
  }
}

TEST(Maeve, IsolatedVertexFeatures) {
  MaeveEstimator est(3, 1, std::size_t{5});
  est.consume(std::vector<Edge>{Edge(0, 1)});
  EXPECT_EQ(est.features(4), VertexFeatures{});
  EXPECT_EQ(est.finalize().meta.n, 5u);
}

TEST(Maeve, ExactRegimeMatchesPerVertexOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = erdos_renyi(15, 0.3, seed);
    MaeveEstimator est(std::max<std::size_t>(g.m(), 2), seed, g.n());
    est.consume(to_stream(g, seed).edges);
    const auto c = exact_vertex_counts(g);
    for (vertex_t v = 0; v < g.n(); ++v) {
      if (v >= est.degrees().size()) {
        EXPECT_EQ(g.degree(v), 0u);
        continue;
      }
      EXPECT_EQ(est.degrees()[v], g.degree(v));
      EXPECT_EQ(est.triangles()[v], static_cast<double>(c.triangles[v]));
      EXPECT_EQ(est.paths()[v], static_cast<double>(c.paths[v]));
    }
  }
}

TEST(MaeveFinalize, Triangle) {
  MaeveEstimator est(3, 1);
  est.consume(std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(0, 2)});
  const Descriptor d = est.finalize();
  ASSERT_EQ(d.values.size(), 20u);
  EXPECT_EQ(std::vector<double>(d.values.begin(), d.values.begin() + 4), (std::vector<double>{2, 0, 0, 0}));
  EXPECT_EQ(std::vector<double>(d.values.begin() + 4, d.values.begin() + 8), (std::vector<double>{1, 0, 0, 0}));
}

TEST(MaeveFinalize, ClawDegreeMoments) {
  const Descriptor d = exact_maeve_descriptor(claw_graph());
  EXPECT_DOUBLE_EQ(d.values[0], 1.5);
  EXPECT_DOUBLE_EQ(d.values[1], std::sqrt(0.75));
}

TEST(MaeveFinalize, VertexTransitiveHasZeroSpread) {
  MaeveEstimator est(2, 1);
  est.consume(std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
  const Descriptor d = est.finalize();
  for (std::size_t f = 0; f < 5; ++f) EXPECT_EQ(d.values[4 * f + 1], 0.0) << f;
}

TEST(MaeveFinalize, EmptyIsDegenerate) {
  MaeveEstimator est(2, 1);
  const Descriptor d = est.finalize();
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.values, std::vector<double>(20, 0.0));
}

TEST(MaeveFinalize, ExactRegimeMatchesEgonetOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = erdos_renyi(20, 0.2, seed + 50);
    MaeveEstimator est(std::max<std::size_t>(g.m(), 2), seed, g.n());
    est.consume(to_stream(g, seed).edges);
    const auto a = est.finalize();
    const auto b = exact_maeve_descriptor(g);
    for (std::size_t i = 0; i < 20; ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-9) << i;
  }
}

TEST(MaeveFinalize, PermutationInvariant) {
  const Graph g = erdos_renyi(18, 0.3, 4);
  const Graph p = testing::permuted(g, 5);
  const auto a = exact_maeve_descriptor(g);
  const auto b = exact_maeve_descriptor(p);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-9);
}

TEST(Maeve, PerEdgeWorkBoundedByBudget) {
  const Graph g = barabasi_albert(300, 5, 2);
  constexpr std::size_t kBudget = 40;
  MaeveEstimator est(kBudget, 1);
  std::uint64_t before = 0;
  for (const Edge& e : to_stream(g, 3).edges) {
    est.process(e);
    // two neighbour scans of at most b entries each
    EXPECT_LE(est.work() - before, 2 * kBudget);
    before = est.work();
  }
}

}  // namespace
}  // namespace gdstream
