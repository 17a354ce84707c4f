#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdsolve/adjacency.hpp"

namespace tdsolve {

/// A minimum-weight cycle, or none when the graph is acyclic. The cycle is
/// listed as v0 ... v_{l-1} with the closing edge back to v0 implied.
struct CycleResult {
  std::optional<Weight> weight;
  std::vector<Vertex> cycle;

  bool acyclic() const { return !weight; }
};

/// Nothing when c is acyclic or a vertex-simple cycle of g of the stated
/// weight (at least 3 vertices when undirected, 2 when directed).
std::optional<std::string> check_cycle(const Graph& g, const CycleResult& c);

/// The lighter of `best` and the lightest cycle through x in G[subtree(x)].
/// `best` must be a minimum cycle of G[below(x)]. Weights must be >= 0.
CycleResult min_cycle_through(const ForestAdjacency& adj, Vertex x, const CycleResult& best,
                              CostLedger* ledger = nullptr);

struct CycleRun {
  CycleResult result;
  CostLedger ledger;
};

CycleRun min_weight_cycle_td(const ForestAdjacency& adj);
CycleResult min_weight_cycle_td(const Graph& g, const EliminationForest& forest);

}  // namespace tdsolve
