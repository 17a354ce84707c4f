#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tdsolve/adjacency.hpp"

namespace tdsolve {

/// p(v) per vertex; valid when w(uv) + p(u) - p(v) >= 0 on every edge.
using Potential = std::vector<Weight>;

/// v0 → v1 → ... → v_{l-1} → v0 with negative total weight.
struct NegativeCycle {
  std::vector<Vertex> vertices;
  Weight weight = 0;
};

using PotentialOrCycle = std::variant<Potential, NegativeCycle>;

/// Nothing if p is a potential on G[view] (on g when view is absent),
/// otherwise the first violating edge.
std::optional<std::string> check_potential(const Graph& g, const Potential& p, const VertexSetView* view = nullptr);
/// Nothing if c is a vertex-simple directed cycle of g with the stated,
/// negative weight.
std::optional<std::string> check_negative_cycle(const Graph& g, const NegativeCycle& c);

/// Extends a potential of G[below(x)] to G[subtree(x)], or finds a negative
/// cycle through x. `below_p` is indexed by vertex; only entries of
/// below(x) are read, and the result carries entries for subtree(x).
PotentialOrCycle increment_potential(const ForestAdjacency& adj, const Potential& below_p, Vertex x,
                                     CostLedger* ledger = nullptr);

struct PotentialRun {
  PotentialOrCycle result;
  CostLedger ledger;
};

PotentialRun potential_or_negcycle_td(const ForestAdjacency& adj);
PotentialOrCycle potential_or_negcycle_td(const Graph& g, const EliminationForest& forest);

struct ShortestPathTree {
  Vertex source = kNoVertex;
  std::vector<Weight> dist;    // kInfinity when unreachable
  std::vector<Vertex> parent;  // kNoVertex for the source and unreachable vertices
};

using PathsOrCycle = std::variant<ShortestPathTree, NegativeCycle>;

/// Shortest paths from s under arbitrary weights, by one Dijkstra pass under
/// the reduced weights of a forest-built potential.
PathsOrCycle sssp_td(const Graph& g, const EliminationForest& forest, Vertex s);

}  // namespace tdsolve
