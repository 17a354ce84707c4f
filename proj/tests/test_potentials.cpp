#include <gtest/gtest.h>

#include "support.hpp"
#include "tdsolve/oracles.hpp"
#include "tdsolve/potentials.hpp"

using namespace tdtest;

namespace {

EliminationForest chain(Vertex n) {
  std::vector<std::optional<Vertex>> parent(n);
  for (Vertex v = 1; v < n; ++v) parent[v] = v - 1;
  return EliminationForest(parent);
}

}  // namespace

TEST(IncrementPotential, LiftsNewVertexOverNegativeEdge) {
  Graph g(2, true, {{0, 1, -3}});
  auto f = chain(2);  // X = {1}, x = 0
  ForestAdjacency adj(g, f);
  auto r = increment_potential(adj, {0, 0}, 0);
  ASSERT_TRUE(std::holds_alternative<Potential>(r));
  EXPECT_EQ(std::get<Potential>(r), (Potential{3, 0}));
  EXPECT_FALSE(check_potential(g, std::get<Potential>(r)));
}

TEST(IncrementPotential, IsolatedVertexGetsZero) {
  Graph g(1, true, {});
  EliminationForest f(std::vector<std::optional<Vertex>>(1));
  ForestAdjacency adj(g, f);
  EXPECT_EQ(std::get<Potential>(increment_potential(adj, {0}, 0)), (Potential{0}));
}

TEST(IncrementPotential, ClosesNegativeCycle) {
  Graph g(3, true, {{1, 2, -2}, {0, 1, 1}, {2, 0, 0}});
  auto f = chain(3);
  ForestAdjacency adj(g, f);
  // Valid on X = {1, 2}: w_p(1->2) = -2 + 2 - 0 = 0.
  auto r = increment_potential(adj, {0, 2, 0}, 0);
  ASSERT_TRUE(std::holds_alternative<NegativeCycle>(r));
  const auto& c = std::get<NegativeCycle>(r);
  EXPECT_EQ(c.vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(c.weight, -1);
  EXPECT_FALSE(check_negative_cycle(g, c));
  EXPECT_TRUE(oracle::bellman_ford(g, 0).negative_cycle);
}

TEST(IncrementPotential, RejectsInvalidInput) {
  Graph g(2, true, {{1, 0, -3}});
  std::vector<std::optional<Vertex>> parent{std::nullopt, 0};
  EliminationForest f(parent);
  ForestAdjacency adj(g, f);
  EXPECT_NO_THROW(increment_potential(adj, {0, 0}, 1));
  Graph h(3, true, {{1, 2, -3}});
  auto c = chain(3);
  ForestAdjacency adj2(h, c);
  EXPECT_THROW(increment_potential(adj2, {0, 0, 0}, 0), ContractViolation);
}

TEST(PotentialTd, NegativeTriangle) {
  Graph g(3, true, {{0, 1, 1}, {1, 2, -2}, {2, 0, 0}});
  auto r = potential_or_negcycle_td(g, dfs_fallback_forest(g));
  ASSERT_TRUE(std::holds_alternative<NegativeCycle>(r));
  EXPECT_EQ(std::get<NegativeCycle>(r).weight, -1);
  EXPECT_FALSE(check_negative_cycle(g, std::get<NegativeCycle>(r)));
}

TEST(PotentialTd, SingleNegativeEdgeAndZeroWeights) {
  Graph g(2, true, {{0, 1, -3}});
  auto r = potential_or_negcycle_td(g, dfs_fallback_forest(g));
  ASSERT_TRUE(std::holds_alternative<Potential>(r));
  EXPECT_FALSE(check_potential(g, std::get<Potential>(r)));
  Graph z(3, true, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}});
  auto rz = potential_or_negcycle_td(z, dfs_fallback_forest(z));
  ASSERT_TRUE(std::holds_alternative<Potential>(rz));
  EXPECT_FALSE(check_potential(z, std::get<Potential>(rz)));
}

TEST(PotentialTd, ShiftedPotentialStaysValid) {
  auto rng = make_rng(401);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, uniform(rng, 1, 20), 0.2, true, -3, 10);
    auto r = potential_or_negcycle_td(g, dfs_fallback_forest(g));
    if (!std::holds_alternative<Potential>(r)) continue;
    Potential p = std::get<Potential>(r);
    Weight c = uniform_weight(rng, -100, 100);
    for (auto& v : p) v += c;
    EXPECT_FALSE(check_potential(g, p));
  }
}

TEST(Sssp, MixedSignsAgreeWithBellmanFord) {
  Graph g(3, true, {{0, 1, -3}, {0, 2, 1}, {2, 1, -5}});
  auto r = sssp_td(g, dfs_fallback_forest(g), 0);
  ASSERT_TRUE(std::holds_alternative<ShortestPathTree>(r));
  const auto& t = std::get<ShortestPathTree>(r);
  EXPECT_EQ(t.dist[1], -4);
  EXPECT_EQ(t.dist[2], 1);
  auto bf = oracle::bellman_ford(g, 0);
  EXPECT_EQ(bf.dist[1], -4);
  EXPECT_EQ(t.parent[1], 2);
}

TEST(Sssp, SingleVertexAndNegativeCycle) {
  Graph one(1, true, {});
  auto r = sssp_td(one, dfs_fallback_forest(one), 0);
  EXPECT_EQ(std::get<ShortestPathTree>(r).dist[0], 0);
  Graph tri(3, true, {{0, 1, 1}, {1, 2, -2}, {2, 0, 0}});
  EXPECT_TRUE(std::holds_alternative<NegativeCycle>(sssp_td(tri, dfs_fallback_forest(tri), 0)));
  EXPECT_THROW(sssp_td(one, dfs_fallback_forest(one), 3), ContractViolation);
}

TEST(Sssp, RandomAgreesWithBellmanFord) {
  auto rng = make_rng(402);
  for (int trial = 0; trial < 300; ++trial) {
    Vertex n = uniform(rng, 1, 30);
    Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.02, 0.2)(rng), true, -10, 10);
    EliminationForest f = some_forest(g, rng);
    auto want = oracle::bellman_ford(g, 0);
    auto got = sssp_td(g, f, 0);
    ASSERT_EQ(std::holds_alternative<NegativeCycle>(got), want.negative_cycle) << trial;
    if (auto* c = std::get_if<NegativeCycle>(&got)) {
      EXPECT_FALSE(check_negative_cycle(g, *c));
      continue;
    }
    const auto& t = std::get<ShortestPathTree>(got);
    for (Vertex v = 0; v < n; ++v) ASSERT_EQ(t.dist[v], want.dist[v].value_or(kInfinity)) << trial;
  }
}
