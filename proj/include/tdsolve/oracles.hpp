#pragma once

#include <optional>
#include <vector>

#include "tdsolve/graph.hpp"
#include "tdsolve/matching.hpp"

// Slow reference implementations. None of them shares algorithmic code with
// the forest-based solvers; they exist to cross-check them.
namespace tdsolve::oracle {

inline constexpr Vertex kMatchingLimit = 10;
inline constexpr Vertex kCycleLimit = 9;
inline constexpr Vertex kPathsLimit = 8;

struct MatchingAnswer {
  Weight weight;  // number of edges for brute_max_matching
  Matching witness;
};

/// Maximum-cardinality matching by exhaustive search. Refuses n > 10.
MatchingAnswer brute_max_matching(const Graph& g);
/// Maximum-weight perfect matching by exhaustive search, or nothing when
/// none exists. Refuses n > 10.
std::optional<MatchingAnswer> brute_mwpm(const Graph& g);
/// Maximum-weight matching of any size. Refuses n > 10.
MatchingAnswer brute_max_weight_matching(const Graph& g);
/// Maximum weight among maximum-cardinality matchings. Refuses n > 10.
MatchingAnswer brute_max_weight_max_size_matching(const Graph& g);

struct BellmanFordAnswer {
  bool negative_cycle = false;
  std::vector<Vertex> cycle;             // v0 ... v_{l-1}, closing edge back to v0
  std::vector<std::optional<Weight>> dist;  // from the source; empty with a negative cycle
};

/// The verdict ranges over the whole graph; distances are from s.
BellmanFordAnswer bellman_ford(const Graph& g, Vertex s);

/// Shortest distances from s by the quadratic array Dijkstra. Needs w >= 0.
std::vector<std::optional<Weight>> dijkstra_dense(const Graph& g, Vertex s,
                                                  const std::vector<char>* removed_edges = nullptr);
std::vector<std::vector<std::optional<Weight>>> all_pairs_dijkstra(const Graph& g);
/// All-pairs distances restricted to vertices with keep[v] set and edges
/// without removed[id] set. Assumes no negative cycles.
std::vector<std::vector<std::optional<Weight>>> floyd_warshall(const Graph& g, const std::vector<char>& keep,
                                                               const std::vector<char>& removed);

/// Shortest s-t distance avoiding each edge of `path`, in path order.
std::vector<std::optional<Weight>> naive_replacement(const Graph& g, const std::vector<Vertex>& path);

struct CycleAnswer {
  std::optional<Weight> weight;  // nothing when acyclic
  std::vector<Vertex> cycle;
};

/// Minimum-weight simple cycle by enumeration. Refuses n > 9.
CycleAnswer brute_min_cycle(const Graph& g);

struct PathsAnswer {
  std::size_t count = 0;
  Weight weight = 0;
  std::vector<std::vector<Vertex>> paths;
};

/// Maximum number of vertex-disjoint directed A-paths (distinct endpoints in
/// A, interior outside A), and among those the minimum total weight.
/// Refuses n > 8.
PathsAnswer brute_disjoint_a_paths(const Graph& g, const std::vector<Vertex>& terminals);

}  // namespace tdsolve::oracle
