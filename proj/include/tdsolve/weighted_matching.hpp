#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdsolve/adjacency.hpp"
#include "tdsolve/matching.hpp"

namespace tdsolve {

/// Reference to a member of a blossom's cycle: a single vertex or a nested blossom.
struct BlossomChild {
  bool is_blossom = false;
  std::int32_t id = 0;  // vertex id, or index into MatchingDuals::blossoms

  friend bool operator==(const BlossomChild&, const BlossomChild&) = default;
};

/// One odd set of the laminar family Ω, stored as an Edmonds blossom.
///
/// children lists the sub-blossoms around the odd cycle, starting with the
/// one that holds the base. links[i] = (a, b) names the edge joining child i
/// (a lies in it) to child i+1 mod k (b lies in it). A blossom given only as
/// a set leaves links empty; such blossoms can be checked but not searched.
struct DualBlossom {
  std::vector<BlossomChild> children;
  std::vector<std::pair<Vertex, Vertex>> links;
  Vertex base = kNoVertex;
  Weight z2 = 0;  // twice z(B)

  bool structured() const { return !links.empty(); }
  friend bool operator==(const DualBlossom&, const DualBlossom&) = default;
};

/// Dual variables (Ω, y, z) scaled by two so that every value is an integer.
///
/// With doubled values the covering condition reads
///   y2[u] + y2[v] + Σ_{B ∋ u,v} z2(B) ≥ 2·w(uv).
struct MatchingDuals {
  std::vector<Weight> y2;               // indexed by vertex
  std::vector<DualBlossom> blossoms;    // creation order; nested blossoms precede their parents

  /// Vertex set of every blossom, sorted.
  std::vector<std::vector<Vertex>> omega_sets() const;
};

struct DualViolation {
  /// 0: Ω is not a laminar family of odd sets inside the view, or some z < 0;
  /// 1: an edge is not covered; 2: a matched edge is not tight;
  /// 3: a blossom lacks a near-perfect matching.
  int condition;
  std::string witness;
};

/// Checks conditions (1)-(3) and the shape of Ω for G[view].
std::optional<DualViolation> check_duals(const Graph& g, const VertexSetView& view, const Matching& m,
                                         const MatchingDuals& d);

struct WeightedAugmentResult {
  bool augmented;
  Matching matching;
  MatchingDuals duals;
};

/// One primal-dual search phase on G[view].
///
/// The search grows a single alternating tree from each exposed vertex in
/// turn (only from `root` when given) and adjusts duals until it either
/// augments or the tree is stuck. On return the duals still satisfy (1)-(3).
/// When augmented is false the matching is maximum-size in G[view]; that
/// says nothing about its weight among maximum-size matchings unless it
/// is perfect.
WeightedAugmentResult weighted_augment(const ForestAdjacency& adj, const VertexSetView& view,
                                       const Matching& m, const MatchingDuals& d,
                                       std::optional<Vertex> root = std::nullopt);

struct PerfectMatchingResult {
  Matching matching;
  MatchingDuals duals;
  CostLedger ledger;
};

/// Thrown by mwpm_td when the graph has no perfect matching.
class ImperfectMatchingError : public std::runtime_error {
 public:
  explicit ImperfectMatchingError(Matching best)
      : std::runtime_error("graph has no perfect matching; maximum matching has " +
                           std::to_string(best.size()) + " edges"),
        matching_(std::move(best)) {}
  const Matching& matching() const { return matching_; }

 private:
  Matching matching_;
};

using WeightedObserver =
    std::function<void(const VertexSetView&, const Matching&, const MatchingDuals&)>;

/// Maximum-weight perfect matching with its dual certificate. The observer,
/// when given, receives f(subtree(x)) after every increment.
PerfectMatchingResult mwpm_td(const ForestAdjacency& adj, const WeightedObserver& observer = {});
PerfectMatchingResult mwpm_td(const Graph& g, const EliminationForest& forest);

}  // namespace tdsolve
