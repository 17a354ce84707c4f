#include <gtest/gtest.h>

#include "support.hpp"
#include "tdsolve/oracles.hpp"
#include "tdsolve/potentials.hpp"
#include "tdsolve/replacement.hpp"

using namespace tdtest;

namespace {

std::vector<Weight> flatten(const std::vector<std::optional<Weight>>& v) {
  std::vector<Weight> out;
  for (auto x : v) out.push_back(x.value_or(kInfinity));
  return out;
}

// A shortest path from 0 to a random reachable target, or nothing.
std::optional<std::vector<Vertex>> random_shortest_path(const Graph& g, std::mt19937_64& rng) {
  auto r = sssp_td(g, dfs_fallback_forest(g), 0);
  const auto& t = std::get<ShortestPathTree>(r);
  std::vector<Vertex> reachable;
  for (Vertex v = 1; v < g.num_vertices(); ++v)
    if (t.dist[v] != kInfinity) reachable.push_back(v);
  if (reachable.empty()) return std::nullopt;
  Vertex target = reachable[uniform(rng, 0, static_cast<Vertex>(reachable.size()) - 1)];
  std::vector<Vertex> path;
  for (Vertex v = target; v != kNoVertex; v = t.parent[v]) path.push_back(v);
  return std::vector<Vertex>(path.rbegin(), path.rend());
}

}  // namespace

TEST(Replacement, IncrementOnShortPath) {
  Graph g(3, true, {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}});
  // Forest 1 -> 0 -> 2, so X = below(0) = {2}.
  EliminationForest f(std::vector<std::optional<Vertex>>{1, std::nullopt, 0});
  ForestAdjacency adj(g, f);
  auto ctx = PathContext::build(g, {0, 1, 2});
  ReplacementTable below{{2, kInfinity}};
  auto t = replacement_increment(adj, ctx, below, 0);
  EXPECT_EQ(table_value(t, 0), 5);
  EXPECT_EQ(table_value(t, 1), 5);
  EXPECT_EQ(replacement_paths_td(g, f, {0, 1, 2}), (std::vector<Weight>{5, 5}));
}

TEST(Replacement, PathOnlyGraphHasNoDetours) {
  Graph g(4, true, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}});
  auto values = replacement_paths_td(g, dfs_fallback_forest(g), {0, 1, 2, 3});
  EXPECT_EQ(values, (std::vector<Weight>(3, kInfinity)));
  Graph e(2, true, {{0, 1, 4}});
  EXPECT_EQ(replacement_paths_td(e, dfs_fallback_forest(e), {0, 1}), (std::vector<Weight>{kInfinity}));
}

TEST(Replacement, DetourAroundMiddleEdge) {
  Graph g(5, true, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {1, 4, 1}, {4, 2, 1}});
  auto values = replacement_paths_td(g, dfs_fallback_forest(g), {0, 1, 2, 3});
  EXPECT_EQ(values, (std::vector<Weight>{kInfinity, 4, kInfinity}));
  EXPECT_EQ(values, flatten(oracle::naive_replacement(g, {0, 1, 2, 3})));
}

TEST(Replacement, UnionMergesByIndex) {
  PathContext ctx;
  ctx.path = {0, 1, 2, 3};
  ReplacementTable a{{0, 7}}, b{{1, 5}};
  auto merged = replacement_union(ctx, {a, b});
  EXPECT_EQ(table_value(merged, 0), 7);
  EXPECT_EQ(table_value(merged, 1), 5);
  EXPECT_EQ(replacement_union(ctx, {a}), a);
  ReplacementTable c{{2, kInfinity}, {3, kInfinity}};
  auto with_inf = replacement_union(ctx, {ReplacementTable{{0, 9}, {1, 4}}, c});
  EXPECT_EQ(table_value(with_inf, 2), 4);
}

TEST(Replacement, RejectsPathsThatAreNotShortest) {
  Graph g(3, true, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_THROW(PathContext::build(g, {0, 1, 2}), InputError);
  EXPECT_THROW(PathContext::build(g, {0, 2, 1}), InputError);
  EXPECT_THROW(PathContext::build(g, {0, 0}), InputError);
  EXPECT_NO_THROW(PathContext::build(g, {0, 2}));
}

TEST(Replacement, UndirectedGraphs) {
  Graph g(4, false, {{0, 1, 1}, {1, 2, 1}, {0, 3, 2}, {3, 2, 2}});
  auto values = replacement_paths_td(g, dfs_fallback_forest(g), {0, 1, 2});
  EXPECT_EQ(values, flatten(oracle::naive_replacement(g, {0, 1, 2})));
  EXPECT_EQ(values, (std::vector<Weight>{4, 4}));
}

TEST(Replacement, RandomAgreesWithPerEdgeDeletion) {
  auto rng = make_rng(601);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Vertex n = uniform(rng, 2, 30);
    Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.05, 0.3)(rng), true, 0, 9);
    auto path = random_shortest_path(g, rng);
    if (!path) continue;
    ++checked;
    auto got = replacement_paths_td(g, some_forest(g, rng), *path);
    ASSERT_EQ(got, flatten(oracle::naive_replacement(g, *path))) << trial;
  }
  EXPECT_GT(checked, 150);
}

TEST(Replacement, TablesMatchTheDetourDecomposition) {
  auto rng = make_rng(602);
  for (int trial = 0; trial < 150; ++trial) {
    Vertex n = uniform(rng, 2, 8);
    Graph g = random_graph(rng, n, 0.35, true, 0, 9);
    auto path = random_shortest_path(g, rng);
    if (!path) continue;
    auto ctx = PathContext::build(g, *path);
    EliminationForest f = some_forest(g, rng);
    ForestAdjacency adj(g, f);
    replacement_paths_td(adj, ctx, [&](const VertexSetView& view, const ReplacementTable& t) {
      std::vector<char> keep(n, 0);
      for (Vertex v : view.vertices()) keep[v] = 1;
      auto d = oracle::floyd_warshall(g, keep, ctx.on_path);
      for (std::int32_t i = 0; i < ctx.last(); ++i) {
        Weight want = kInfinity;
        for (std::int32_t a = 0; a <= i; ++a)
          for (std::int32_t b = i + 1; b <= ctx.last(); ++b)
            if (auto dab = d[ctx.path[a]][ctx.path[b]]) want = std::min(want, ctx.pref[a] + *dab + ctx.suf[b]);
        ASSERT_EQ(table_value(t, i), want) << "trial " << trial << " index " << i;
      }
    });
  }
}
