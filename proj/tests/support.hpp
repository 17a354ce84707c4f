#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "tdsolve/forest.hpp"
#include "tdsolve/graph.hpp"

namespace tdtest {

using namespace tdsolve;

inline std::uint64_t base_seed() {
  if (const char* s = std::getenv("TDSOLVE_SEED")) return std::stoull(s);
  return 20240531;
}

inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(base_seed() * 1000003 + salt); }

inline Vertex uniform(std::mt19937_64& rng, Vertex lo, Vertex hi) {
  return std::uniform_int_distribution<Vertex>(lo, hi)(rng);
}

inline Weight uniform_weight(std::mt19937_64& rng, Weight lo, Weight hi) {
  return std::uniform_int_distribution<Weight>(lo, hi)(rng);
}

/// G(n, p) with uniform integer weights; for directed graphs each ordered
/// pair is tried independently.
inline Graph random_graph(std::mt19937_64& rng, Vertex n, double p, bool directed, Weight lo, Weight hi) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v && coin(rng)) edges.push_back({u, v, uniform_weight(rng, lo, hi)});
  return Graph(n, directed, std::move(edges));
}

/// Exact forest when small, otherwise the DFS forest; alternates on a coin
/// so both kinds get exercised.
inline EliminationForest some_forest(const Graph& g, std::mt19937_64& rng) {
  if (g.num_vertices() <= 9 && std::bernoulli_distribution(0.5)(rng)) return exact_treedepth(g).forest;
  return dfs_fallback_forest(g);
}

struct PartialTwoTree {
  Graph graph;
  TreeDecomposition td;
};

/// A random 2-tree with some edges deleted, plus the width-2 decomposition
/// left over from its construction.
inline PartialTwoTree random_partial_two_tree(std::mt19937_64& rng, Vertex n, double keep = 0.7) {
  TreeDecomposition td;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::int32_t> bag_of;  // per entry of edges, a bag holding both ends
  if (n <= 3) {
    std::vector<Vertex> bag;
    for (Vertex v = 0; v < n; ++v) bag.push_back(v);
    td.bags.push_back(bag);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  } else {
    td.bags.push_back({0, 1, 2});
    edges = {{0, 1}, {0, 2}, {1, 2}};
    bag_of = {0, 0, 0};
    for (Vertex v = 3; v < n; ++v) {
      auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<Vertex>(edges.size()) - 1));
      auto [a, b] = edges[k];
      auto bag = static_cast<std::int32_t>(td.bags.size());
      td.bags.push_back({a, b, v});
      td.tree.emplace_back(bag_of[k], bag);
      edges.push_back({a, v});
      edges.push_back({b, v});
      bag_of.push_back(bag);
      bag_of.push_back(bag);
    }
  }
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> kept;
  for (auto [u, v] : edges)
    if (coin(rng)) kept.push_back({u, v, uniform_weight(rng, 0, 9)});
  return {Graph(n, false, std::move(kept)), std::move(td)};
}

}  // namespace tdtest
