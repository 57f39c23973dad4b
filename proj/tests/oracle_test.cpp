#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "gdstream/gabe.hpp"
#include "gdstream/math.hpp"
#include "gdstream/oracle.hpp"
#include "gdstream/patterns.hpp"

namespace gdstream {
namespace {

using testing::brute_count;
using testing::claw_graph;
using testing::complete_graph;
using testing::make_graph;
using testing::random_corpus;

TEST(Catalog, SeventeenPairwiseNonIsomorphic) {
  for (std::size_t i = 0; i < kPatternCount; ++i) {
    EXPECT_EQ(index(kCatalog[i].pattern), i);
    const auto& p = kCatalog[i];
    EXPECT_EQ(classify(p.order, detail::pattern_mask(p)), p.pattern) << p.name;
  }
}

TEST(Catalog, CanonicalOrderSortedByOrderThenEdges) {
  for (std::size_t i = 1; i < kPatternCount; ++i) {
    const auto& a = kCatalog[i - 1];
    const auto& b = kCatalog[i];
    EXPECT_TRUE(a.order < b.order || (a.order == b.order && a.edge_count <= b.edge_count));
  }
}

TEST(OverlapMatrix, Examples) {
  const auto o = overlap_matrix();
  EXPECT_EQ(o[index(Pattern::wedge)][index(Pattern::triangle)], 3);
  EXPECT_EQ(o[index(Pattern::edgeless3)][index(Pattern::triangle)], 1);
  for (std::size_t i = 0; i < kPatternCount; ++i) EXPECT_EQ(o[i][i], 1);
}

TEST(OverlapMatrix, UpperTriangularBlockDiagonal) {
  const auto o = overlap_matrix();
  for (std::size_t i = 0; i < kPatternCount; ++i) {
    for (std::size_t j = 0; j < kPatternCount; ++j) {
      if (j < i || kCatalog[i].order != kCatalog[j].order) EXPECT_EQ(o[i][j], 0) << i << "," << j;
    }
  }
}

TEST(OverlapMatrix, EdgelessRowIsAllOnesWithinBlock) {
  for (int order = 2; order <= 4; ++order) {
    const std::size_t first = block_begin(order);
    for (std::size_t j = first; j < first + block_size(order); ++j) EXPECT_EQ(kOverlap[first][j], 1);
  }
}

TEST(OverlapMatrix, AgreesWithBruteForceOnPatterns) {
  // O(i, j) = copies of pattern i spanning pattern j.
  for (const auto& host : kCatalog) {
    Graph g(static_cast<std::size_t>(host.order));
    for (int e = 0; e < host.edge_count; ++e) g.add_edge(host.edges[e].first, host.edges[e].second);
    for (const auto& guest : kCatalog) {
      if (guest.order != host.order) continue;
      EXPECT_EQ(kOverlap[index(guest.pattern)][index(host.pattern)],
                static_cast<std::int64_t>(brute_count(guest.pattern, g, false)))
          << guest.name << " in " << host.name;
    }
  }
}

TEST(SubgraphCounts, Triangle) {
  const auto h = exact_subgraph_counts(complete_graph(3));
  EXPECT_EQ(h[Pattern::edge], 3);
  EXPECT_EQ(h[Pattern::wedge], 3);
  EXPECT_EQ(h[Pattern::triangle], 1);
  EXPECT_EQ(h[Pattern::edgeless2], 3);
  EXPECT_EQ(h[Pattern::edgeless3], 1);
  EXPECT_EQ(h[Pattern::edge_isolated], 3);
  for (std::size_t i = block_begin(4); i < kPatternCount; ++i) EXPECT_EQ(h.values[i], 0) << i;
}

TEST(SubgraphCounts, K4) {
  const auto h = exact_subgraph_counts(complete_graph(4));
  EXPECT_EQ(h[Pattern::triangle], 4);
  EXPECT_EQ(h[Pattern::wedge], 12);
  EXPECT_EQ(h[Pattern::path4], 12);
  EXPECT_EQ(h[Pattern::cycle4], 3);
  EXPECT_EQ(h[Pattern::paw], 12);
  EXPECT_EQ(h[Pattern::diamond], 6);
  EXPECT_EQ(h[Pattern::k4], 1);
  EXPECT_EQ(h[Pattern::claw], 4);
}

TEST(SubgraphCounts, Edgeless) {
  const auto h = exact_subgraph_counts(Graph(5));
  EXPECT_EQ(h[Pattern::edgeless2], 10);
  EXPECT_EQ(h[Pattern::edgeless3], 10);
  EXPECT_EQ(h[Pattern::edgeless4], 5);
  for (const auto& p : kCatalog)
    if (p.edge_count > 0) EXPECT_EQ(h[p.pattern], 0) << p.name;
}

TEST(SubgraphCounts, RefusesLargeGraphs) {
  EXPECT_THROW(exact_subgraph_counts(Graph(61)), size_error);
  EXPECT_THROW(exact_induced_counts(Graph(11), 10), size_error);
  EXPECT_NO_THROW(exact_induced_counts(Graph(10), 10));
}

TEST(InducedCounts, Path3) {
  const auto h = exact_induced_counts(make_graph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(h[Pattern::wedge], 1);
  EXPECT_EQ(h[Pattern::triangle], 0);
  EXPECT_EQ(h[Pattern::edge_isolated], 0);
  EXPECT_EQ(h[Pattern::edgeless3], 0);
}

TEST(InducedCounts, K4OnlyK4) {
  const auto h = exact_induced_counts(complete_graph(4));
  EXPECT_EQ(h[Pattern::k4], 1);
  for (std::size_t i = block_begin(4); i + 1 < kPatternCount; ++i) EXPECT_EQ(h.values[i], 0);
}

TEST(InducedCounts, K3Order3Block) {
  const auto h = exact_induced_counts(complete_graph(3));
  EXPECT_EQ(h[Pattern::edgeless3], 0);
  EXPECT_EQ(h[Pattern::edge_isolated], 0);
  EXPECT_EQ(h[Pattern::wedge], 0);
  EXPECT_EQ(h[Pattern::triangle], 1);
}

// Property checks over a random corpus.
class OracleCorpus : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { corpus_ = new std::vector<Graph>(random_corpus(60, 2024)); }
  static void TearDownTestSuite() {
    delete corpus_;
    corpus_ = nullptr;
  }
  static std::vector<Graph>* corpus_;
};
std::vector<Graph>* OracleCorpus::corpus_ = nullptr;

TEST_F(OracleCorpus, MatchesBruteForceEmbeddingCounts) {
  for (const Graph& g : *corpus_) {
    const auto h = exact_subgraph_counts(g);
    const auto ih = exact_induced_counts(g);
    for (const auto& p : kCatalog) {
      EXPECT_EQ(h[p.pattern], static_cast<double>(brute_count(p.pattern, g, false))) << p.name;
      EXPECT_EQ(ih[p.pattern], static_cast<double>(brute_count(p.pattern, g, true))) << p.name;
    }
  }
}

TEST_F(OracleCorpus, OverlapTimesInducedIsSubgraph) {
  for (const Graph& g : *corpus_) {
    const auto via_overlap = subgraph_from_induced(exact_induced_counts(g));
    EXPECT_EQ(via_overlap.values, exact_subgraph_counts(g).values);
  }
}

TEST_F(OracleCorpus, InducedBlocksSumToBinomial) {
  for (const Graph& g : *corpus_) {
    const auto ih = exact_induced_counts(g);
    for (int k = 2; k <= 4; ++k) {
      double sum = 0;
      for (std::size_t i = block_begin(k); i < block_begin(k) + block_size(k); ++i) sum += ih.values[i];
      EXPECT_EQ(sum, choose(static_cast<double>(g.n()), k));
    }
  }
}

TEST_F(OracleCorpus, InvariantUnderRelabeling) {
  for (std::size_t i = 0; i < corpus_->size(); ++i) {
    const Graph& g = (*corpus_)[i];
    const Graph p = testing::permuted(g, i);
    EXPECT_EQ(exact_subgraph_counts(g).values, exact_subgraph_counts(p).values);
    EXPECT_EQ(exact_induced_counts(g).values, exact_induced_counts(p).values);
  }
}

TEST_F(OracleCorpus, ClosedFormsMatch) {
  for (const Graph& g : *corpus_) {
    const auto h = exact_subgraph_counts(g);
    std::vector<std::uint64_t> deg(g.n());
    for (vertex_t v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    const auto cf = closed_form_counts(g.n(), g.m(), deg, h[Pattern::triangle]);
    for (Pattern p : {Pattern::edgeless2, Pattern::edge, Pattern::edgeless3, Pattern::edge_isolated, Pattern::wedge,
                      Pattern::edgeless4, Pattern::edge_2isolated, Pattern::two_edges, Pattern::wedge_isolated,
                      Pattern::triangle_isolated, Pattern::claw}) {
      EXPECT_EQ(cf[p], h[p]) << info(p).name;
    }
  }
}

TEST(VertexFeatures, ClawAndTriangle) {
  const Graph claw = claw_graph();
  EXPECT_EQ(exact_vertex_features(claw, 0), (VertexFeatures{3, 0, 1, 3, 0}));
  EXPECT_EQ(exact_vertex_features(claw, 1), (VertexFeatures{1, 0, 3, 1, 2}));
  EXPECT_EQ(exact_vertex_features(complete_graph(3), 0), (VertexFeatures{2, 1, 2, 3, 0}));
  EXPECT_THROW(exact_vertex_features(claw, 4), data_error);
}

TEST_F(OracleCorpus, FeatureIdentitiesFromCounts) {
  for (const Graph& g : *corpus_) {
    const auto c = exact_vertex_counts(g);
    for (vertex_t v = 0; v < g.n(); ++v) {
      const auto via_counts = features_from_counts(static_cast<double>(g.degree(v)),
                                                   static_cast<double>(c.triangles[v]),
                                                   static_cast<double>(c.paths[v]));
      EXPECT_EQ(via_counts, exact_vertex_features(g, v));
    }
  }
}

}  // namespace
}  // namespace gdstream
