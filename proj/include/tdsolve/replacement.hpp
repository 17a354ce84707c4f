#pragma once

#include <functional>
#include <vector>

#include "tdsolve/adjacency.hpp"

namespace tdsolve {

/// A fixed shortest s-t path v_0 ... v_l with prefix and suffix lengths.
struct PathContext {
  std::vector<Vertex> path;
  std::vector<Weight> pref, suf;        // per path index
  std::vector<std::int32_t> index_of;   // per vertex, -1 when off the path
  std::vector<char> on_path;            // per edge id

  std::int32_t last() const { return static_cast<std::int32_t>(path.size()) - 1; }

  /// Validates that `path` is a simple path of g with nonnegative weights
  /// that is as short as any s-t path. Throws InputError otherwise.
  static PathContext build(const Graph& g, std::vector<Vertex> path);
};

struct ReplacementEntry {
  std::int32_t index;  // path position i
  Weight value;        // shortest detour length for v_i v_{i+1}, kInfinity when none

  friend bool operator==(const ReplacementEntry&, const ReplacementEntry&) = default;
};

/// Entries for the path vertices inside the current vertex set, by
/// increasing index. A missing index inherits the value of the nearest
/// listed index below it.
using ReplacementTable = std::vector<ReplacementEntry>;

Weight table_value(const ReplacementTable& t, std::int32_t i);

/// Table for G[subtree(x)] ∪ P from the table for G[below(x)] ∪ P.
ReplacementTable replacement_increment(const ForestAdjacency& adj, const PathContext& ctx,
                                       const ReplacementTable& below, Vertex x, CostLedger* ledger = nullptr);

/// Merges the tables of parts with no edges between them.
ReplacementTable replacement_union(const PathContext& ctx, const std::vector<ReplacementTable>& parts);

struct ReplacementRun {
  std::vector<Weight> values;  // per path edge, kInfinity when the edge is a bridge for s-t
  CostLedger ledger;
};

using ReplacementObserver = std::function<void(const VertexSetView&, const ReplacementTable&)>;

ReplacementRun replacement_paths_td(const ForestAdjacency& adj, const PathContext& ctx,
                                    const ReplacementObserver& observer = {});
std::vector<Weight> replacement_paths_td(const Graph& g, const EliminationForest& forest,
                                         const std::vector<Vertex>& path);

}  // namespace tdsolve
