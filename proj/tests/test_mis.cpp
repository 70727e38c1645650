#include <gtest/gtest.h>

#include <vector>

#include "lamis/errors.hpp"
#include "lamis/mis.hpp"
#include "lamis/random.hpp"
#include "test_util.hpp"

using namespace lamis;

TEST(GreedyMis, TriangleGivesSingleton) { EXPECT_EQ(greedy_mis(testutil::complete(3)), VertexSet(3, {0})); }

TEST(GreedyMis, PathFirstFit) { EXPECT_EQ(greedy_mis(testutil::path(3)), VertexSet(3, {0, 2})); }

TEST(GreedyMis, FiveCycleMatchesExact) {
  const Graph c5 = testutil::cycle(5);
  const VertexSet g = greedy_mis(c5);
  EXPECT_EQ(g, VertexSet(5, {0, 2}));
  EXPECT_EQ(g.size(), exact_mis(c5).size());
}

TEST(GreedyMis, CustomOrder) {
  const std::vector<Vertex> order{1, 0, 2};
  EXPECT_EQ(greedy_mis(testutil::path(3), order), VertexSet(3, {1}));
}

TEST(GreedyMis, RejectsNonPermutation) {
  const std::vector<Vertex> dup{0, 0, 1};
  const std::vector<Vertex> shortened{0, 1};
  EXPECT_THROW(greedy_mis(testutil::path(3), dup), InputError);
  EXPECT_THROW(greedy_mis(testutil::path(3), shortened), InputError);
}

TEST(GreedyMis, AlwaysMaximalForRandomOrders) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 60);
    const Graph g = testutil::random_graph(n, uniform01(rng), rng());
    auto order = identity_order(n);
    shuffle(order.begin(), order.end(), rng);
    const VertexSet s = greedy_mis(g, order);
    EXPECT_TRUE(is_independent_set(g, s));
    EXPECT_TRUE(is_maximal_independent_set(g, s));
  }
}

TEST(VertexCover, EdgelessIsEmpty) { EXPECT_TRUE(vertex_cover_2approx(testutil::edgeless(6)).empty()); }

TEST(VertexCover, SingleEdgeTakesBothEndpoints) {
  EXPECT_EQ(vertex_cover_2approx(testutil::path(2)), VertexSet(2, {0, 1}));
}

TEST(VertexCover, PathOfFourHandTrace) {
  const VertexSet c = vertex_cover_2approx(testutil::path(4));
  EXPECT_EQ(c, VertexSet(4, {0, 1, 2, 3}));
  EXPECT_TRUE(VertexSet::all(4).set_difference(c).empty());
}

TEST(VertexCover, CoversAndComplementIndependent) {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 16);
    const Graph g = testutil::random_graph(n, uniform01(rng), rng());
    const VertexSet c = vertex_cover_2approx(g);
    EXPECT_TRUE(is_vertex_cover(g, c));
    EXPECT_TRUE(is_independent_set(g, VertexSet::all(n).set_difference(c)));
    EXPECT_LE(c.size(), 2 * testutil::brute_force_min_cover(g));
  }
}

TEST(IndependentSet, Examples) {
  const Graph tri = testutil::complete(3);
  EXPECT_FALSE(is_independent_set(tri, VertexSet(3, {0, 1})));
  EXPECT_TRUE(is_independent_set(tri, VertexSet(3, {0})));
  EXPECT_TRUE(is_independent_set(testutil::cycle(5), VertexSet(5, {0, 2})));
}

TEST(ExactMis, FiveCycle) { EXPECT_EQ(exact_mis(testutil::cycle(5)).size(), 2u); }

TEST(ExactMis, Petersen) {
  const Graph p = testutil::petersen();
  ASSERT_EQ(p.num_edges(), 15u);
  for (Vertex v = 0; v < 10; ++v) ASSERT_EQ(p.degree(v), 3u);
  EXPECT_EQ(testutil::brute_force_alpha(p), 4u);
  const VertexSet s = exact_mis(p);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(is_independent_set(p, s));
}

TEST(ExactMis, Edgeless) { EXPECT_EQ(exact_mis(testutil::edgeless(7)).size(), 7u); }

TEST(ExactMis, CapabilityLimit) {
  EXPECT_NO_THROW(exact_mis(testutil::cycle(30)));
  EXPECT_THROW(exact_mis(testutil::cycle(31)), CapabilityError);
}

TEST(ExactMis, AgreesWithEnumerationAndCoverDuality) {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = uniform_below(rng, 17);
    const Graph g = testutil::random_graph(n, uniform01(rng), rng());
    const VertexSet s = exact_mis(g);
    EXPECT_TRUE(is_independent_set(g, s));
    EXPECT_EQ(s.size(), testutil::brute_force_alpha(g));
    EXPECT_EQ(s.size() + testutil::brute_force_min_cover(g), n);
    EXPECT_LE(greedy_mis(g).size(), s.size());
  }
}

TEST(ExactMis, DenseThirtyVertexGraphsFinish) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = testutil::random_graph(30, 0.15, seed);
    const VertexSet s = exact_mis(g);
    EXPECT_TRUE(is_maximal_independent_set(g, s));
    EXPECT_GE(s.size(), greedy_mis(g).size());
  }
}
