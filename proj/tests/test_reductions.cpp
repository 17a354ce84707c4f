#include <gtest/gtest.h>

#include "support.hpp"
#include "tdsolve/oracles.hpp"
#include "tdsolve/reductions.hpp"
#include "tdsolve/weighted_matching.hpp"

using namespace tdtest;

namespace {

EliminationForest chain(Vertex n) {
  std::vector<std::optional<Vertex>> parent(n);
  for (Vertex v = 1; v < n; ++v) parent[v] = v - 1;
  return EliminationForest(parent);
}

}  // namespace

TEST(MaxWeightReduction, NegativeEdgeIsLeftOut) {
  Graph g(2, false, {{0, 1, -5}});
  auto r = reduce_max_weight_matching(g, chain(2));
  EXPECT_EQ(r.graph.num_vertices(), 4);
  EXPECT_EQ(r.graph.num_edges(), 4u);
  auto best = oracle::brute_mwpm(r.graph);
  ASSERT_TRUE(best);
  EXPECT_EQ(best->weight, 0);
  auto m = mwpm_td(r.graph, r.forest).matching;
  EXPECT_EQ(m, (Matching{{{0, 2}, {1, 3}}}));
  EXPECT_EQ(r.extract(m).size(), 0u);
}

TEST(MaxWeightReduction, PositiveEdgeIsKept) {
  Graph g(2, false, {{0, 1, 5}});
  auto m = max_weight_matching_td(g, chain(2));
  EXPECT_EQ(m, (Matching{{{0, 1}}}));
  EXPECT_EQ(m.weight(g), 5);
}

TEST(MaxWeightReduction, ChainForestDoublesDepth) {
  Graph g(2, false, {{0, 1, 1}});
  auto r = reduce_max_weight_matching(g, chain(2));
  EXPECT_EQ(r.forest.depth(), 4);
  EXPECT_EQ(r.forest.parent(0), std::nullopt);
  EXPECT_EQ(r.forest.parent(2), 0);
  EXPECT_EQ(r.forest.parent(1), 2);
  EXPECT_EQ(r.forest.parent(3), 1);
  EXPECT_FALSE(validate_forest(r.graph, r.forest));
}

TEST(MaxSizeShift, PathWithNegativeWeights) {
  Graph g(3, false, {{0, 1, -1}, {1, 2, -2}});
  EXPECT_EQ(max_size_shift(g), 4);
  Graph s = shift_for_max_size(g);
  EXPECT_EQ(s.edge(0).w, 3);
  EXPECT_EQ(s.edge(1).w, 2);
  auto m = max_weight_max_size_matching_td(g, chain(3));
  EXPECT_EQ(m, (Matching{{{0, 1}}}));
  EXPECT_EQ(m.weight(g), oracle::brute_max_weight_max_size_matching(g).weight);
}

TEST(MaxSizeShift, ZeroAndSingleEdge) {
  Graph zero(3, false, {{0, 1, 0}, {1, 2, 0}});
  EXPECT_EQ(max_size_shift(zero), 1);
  Graph one(2, false, {{0, 1, 10}});
  EXPECT_EQ(max_size_shift(one), 11);
  EXPECT_EQ(shift_for_max_size(one).edge(0).w, 21);
  EXPECT_EQ(max_weight_max_size_matching_td(one, chain(2)).size(), 1u);
}

TEST(MaxSizeShift, OverflowIsReported) {
  const Weight big = std::numeric_limits<Weight>::max() / 2 + 1;
  Graph g(3, false, {{0, 1, big}, {1, 2, big}});
  EXPECT_THROW(max_size_shift(g), OverflowError);
}

TEST(APaths, DirectedPathOfThree) {
  Graph g(3, true, {{0, 1, 1}, {1, 2, 1}});
  auto r = reduce_disjoint_a_paths(g, {0, 2}, chain(3));
  EXPECT_EQ(r.graph.num_vertices(), 4);
  EXPECT_FALSE(validate_forest(r.graph, r.forest));
  auto got = min_weight_disjoint_a_paths_td(g, {0, 2}, chain(3));
  ASSERT_EQ(got.paths.size(), 1u);
  EXPECT_EQ(got.paths[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(got.weight, 2);
}

TEST(APaths, AllTerminalsSingleArc) {
  Graph g(2, true, {{0, 1, 3}});
  auto got = min_weight_disjoint_a_paths_td(g, {0, 1}, chain(2));
  ASSERT_EQ(got.paths.size(), 1u);
  EXPECT_EQ(got.weight, 3);
}

TEST(APaths, IsolatedTerminals) {
  Graph g(2, true, {});
  EliminationForest f(std::vector<std::optional<Vertex>>(2));
  EXPECT_TRUE(min_weight_disjoint_a_paths_td(g, {0, 1}, f).paths.empty());
  EXPECT_TRUE(min_weight_disjoint_a_paths_td(g, {0}, f).paths.empty());
  EXPECT_TRUE(min_weight_disjoint_a_paths_td(g, {}, f).paths.empty());
}

TEST(APaths, OppositeArcsBetweenTerminalsKeepTheLighter) {
  Graph g(2, true, {{0, 1, 4}, {1, 0, 2}});
  auto r = reduce_disjoint_a_paths(g, {0, 1}, chain(2));
  EXPECT_EQ(r.graph.num_edges(), 1u);
  auto got = min_weight_disjoint_a_paths_td(g, {0, 1}, chain(2));
  ASSERT_EQ(got.paths.size(), 1u);
  EXPECT_EQ(got.paths[0], (std::vector<Vertex>{1, 0}));
  EXPECT_EQ(got.weight, 2);
}

TEST(APaths, CyclesAmongInnerVerticesAreDropped) {
  // 0 -> 1 -> 3 is the only A-path; 1 <-> 2 forms a zero cycle.
  Graph g(4, true, {{0, 1, 1}, {1, 3, 1}, {1, 2, 0}, {2, 1, 0}});
  auto got = min_weight_disjoint_a_paths_td(g, {0, 3}, dfs_fallback_forest(g));
  ASSERT_EQ(got.paths.size(), 1u);
  EXPECT_EQ(got.weight, 2);
}

TEST(Reductions, RandomRoundTrips) {
  auto rng = make_rng(301);
  for (int trial = 0; trial < 150; ++trial) {
    Vertex n = uniform(rng, 1, 8);
    Graph g = random_graph(rng, n, 0.4, false, -9, 9);
    EliminationForest f = some_forest(g, rng);
    auto mw = max_weight_matching_td(g, f);
    ASSERT_FALSE(check_matching(g, mw));
    ASSERT_EQ(mw.weight(g), oracle::brute_max_weight_matching(g).weight) << trial;
    auto ms = max_weight_max_size_matching_td(g, f);
    auto want = oracle::brute_max_weight_max_size_matching(g);
    ASSERT_EQ(ms.size(), want.witness.size()) << trial;
    ASSERT_EQ(ms.weight(g), want.weight) << trial;
    EXPECT_LE(reduce_max_weight_matching(g, f).forest.depth(), 2 * f.depth());

    Graph d = random_graph(rng, n, 0.3, true, 0, 9);
    EliminationForest fd = some_forest(d, rng);
    std::vector<Vertex> a;
    for (Vertex v = 0; v < n; ++v)
      if (std::bernoulli_distribution(0.5)(rng)) a.push_back(v);
    auto got = min_weight_disjoint_a_paths_td(d, a, fd);
    auto exp = oracle::brute_disjoint_a_paths(d, a);
    ASSERT_EQ(got.paths.size(), exp.count) << trial;
    ASSERT_EQ(got.weight, exp.weight) << trial;
    EXPECT_LE(reduce_disjoint_a_paths(d, a, fd).forest.depth(), 2 * fd.depth());
  }
}
