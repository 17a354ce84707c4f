#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdsolve/adjacency.hpp"
#include "tdsolve/forest.hpp"
#include "tdsolve/graph.hpp"

namespace tdsolve {

/// A set of vertex-disjoint edges, each stored as (min, max).
struct Matching {
  std::vector<std::pair<Vertex, Vertex>> edges;

  std::size_t size() const { return edges.size(); }
  /// Partner of every vertex, kNoVertex when exposed.
  std::vector<Vertex> mates(Vertex n) const;
  Weight weight(const Graph& g) const;
  void normalize();

  static Matching from_mates(std::span<const Vertex> mate);
  /// mate[i] is the partner of vertices[i] (or kNoVertex).
  static Matching from_slice(std::span<const Vertex> vertices, std::span<const Vertex> mate);

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Nothing if m is a matching of G[view] (or of g when view is absent);
/// otherwise a description of the first defect.
std::optional<std::string> check_matching(const Graph& g, const Matching& m,
                                          const VertexSetView* view = nullptr);

/// One augmenting-path search. Returns a matching with one more edge, or
/// nothing when m is already maximum in G[view].
///
/// With `root` set, only augmenting paths ending at that exposed vertex are
/// searched; this is complete whenever m is maximum in G[view] minus root.
std::optional<Matching> augment_matching(const ForestAdjacency& adj, const VertexSetView& view,
                                         const Matching& m, std::optional<Vertex> root = std::nullopt);

struct MatchingRun {
  Matching matching;
  CostLedger ledger;
};

/// Maximum-cardinality matching by one augmentation per forest vertex.
/// `observer`, when given, sees every intermediate f(subtree(x)).
MatchingRun max_matching_td(
    const ForestAdjacency& adj,
    const std::function<void(const VertexSetView&, const Matching&)>& observer = {});

Matching max_matching_td(const Graph& g, const EliminationForest& forest);

}  // namespace tdsolve
