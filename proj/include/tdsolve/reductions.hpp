#pragma once

#include <vector>

#include "tdsolve/forest.hpp"
#include "tdsolve/graph.hpp"
#include "tdsolve/matching.hpp"

namespace tdsolve {

/// Perfect-matching instance whose optimum encodes a maximum-weight matching.
///
/// Vertex v keeps its id and gets a copy n + v; every edge is duplicated on
/// the copies and each v is joined to its copy with weight 0. In the forest,
/// v is replaced by the path v → v'.
struct MatchingReduction {
  Graph graph;
  EliminationForest forest;
  Vertex original_vertices = 0;

  /// Edges of the reduced matching that lie between original vertices.
  Matching extract(const Matching& reduced) const;
};

MatchingReduction reduce_max_weight_matching(const Graph& g, const EliminationForest& forest);

/// The offset W = Σ|w(e)| + 1; throws OverflowError when it or any shifted
/// weight does not fit.
Weight max_size_shift(const Graph& g);
/// Same graph with every weight raised by max_size_shift(g).
Graph shift_for_max_size(const Graph& g);

/// Maximum-weight matching (of any size).
Matching max_weight_matching_td(const Graph& g, const EliminationForest& forest);
/// Maximum weight among maximum-cardinality matchings.
Matching max_weight_max_size_matching_td(const Graph& g, const EliminationForest& forest);

/// Undirected instance for vertex-disjoint directed A-paths.
///
/// Terminals stay single vertices. A non-terminal v becomes v⁺ (carrying its
/// out-arcs) and v⁻ (carrying its in-arcs) joined by a weight-0 edge. Arc
/// u→v becomes the edge u⁺v⁻. When two terminals are joined in both
/// directions only the lighter arc is kept.
struct APathReduction {
  Graph graph;
  EliminationForest forest;
  std::vector<char> terminal;         // per original vertex
  std::vector<Vertex> plus, minus;    // reduced ids; equal for terminals
  std::vector<std::int32_t> arc;      // original edge id per reduced edge, -1 for v⁺v⁻
  const Graph* original = nullptr;
};

struct DisjointPaths {
  std::vector<std::vector<Vertex>> paths;  // original vertex ids, first and last in A
  Weight weight = 0;
};

APathReduction reduce_disjoint_a_paths(const Graph& g, const std::vector<Vertex>& terminals,
                                       const EliminationForest& forest);

/// Reads the path system off a maximum-size matching of the reduced graph.
/// Split pairs left partly or fully exposed are rematched first; closed
/// cycles among non-terminals are dropped.
DisjointPaths extract_a_paths(const APathReduction& r, const Matching& reduced);

/// Maximum number of vertex-disjoint A-paths, of minimum total weight among
/// all such systems. Needs a directed graph with nonnegative weights.
DisjointPaths min_weight_disjoint_a_paths_td(const Graph& g, const std::vector<Vertex>& terminals,
                                             const EliminationForest& forest);

}  // namespace tdsolve
