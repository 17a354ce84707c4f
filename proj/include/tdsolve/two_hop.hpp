#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tdsolve/adjacency.hpp"

namespace tdsolve {

struct HubEntry {
  Vertex hub;
  Weight dist;

  friend bool operator==(const HubEntry&, const HubEntry&) = default;
};

/// Hub labels: out[u] holds (h, d(u,h)) and in[u] holds (h, d(h,u)), each
/// sorted by hub id. Unreachable hubs are not stored.
struct TwoHopLabels {
  std::vector<std::vector<HubEntry>> out, in;

  Vertex num_vertices() const { return static_cast<Vertex>(out.size()); }
  /// max over u of |out[u]| + |in[u]|
  std::size_t max_label_size() const;

  friend bool operator==(const TwoHopLabels&, const TwoHopLabels&) = default;
};

/// d(s,t) as the best common hub, kInfinity when there is none.
Weight two_hop_query(const TwoHopLabels& labels, Vertex s, Vertex t);

/// Structural checks: sorted lists, self entries, hubs are ancestors in the
/// forest and the label size is at most twice the forest depth.
std::optional<std::string> check_two_hop(const TwoHopLabels& labels, const EliminationForest& forest);

struct TwoHopRun {
  TwoHopLabels labels;
  CostLedger ledger;
};

/// Weights must be nonnegative (InputError otherwise).
TwoHopRun build_two_hop_td(const ForestAdjacency& adj);
TwoHopLabels build_two_hop_td(const Graph& g, const EliminationForest& forest);

/// Little-endian binary snapshot: version byte, vertex count, then per
/// vertex the forward list and then the backward list, each as a count
/// followed by (hub, distance) pairs.
void save_labels(std::ostream& os, const TwoHopLabels& labels);
TwoHopLabels load_labels(std::istream& is);
void save_labels(const std::string& path, const TwoHopLabels& labels);
TwoHopLabels load_labels(const std::string& path);

}  // namespace tdsolve
