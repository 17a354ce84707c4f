#pragma once

#include <span>
#include <vector>

#include "tdsolve/forest.hpp"
#include "tdsolve/graph.hpp"

namespace tdsolve {

/// Operation counters for one framework run. Counters only ever grow.
struct CostLedger {
  std::uint64_t increment_calls = 0;
  std::uint64_t union_calls = 0;
  std::uint64_t edge_touches = 0;
  std::uint64_t vertex_touches = 0;

  CostLedger& operator+=(const CostLedger& o) {
    increment_calls += o.increment_calls;
    union_calls += o.union_calls;
    edge_touches += o.edge_touches;
    vertex_touches += o.vertex_touches;
    return *this;
  }
};

struct EdgeRef {
  Vertex other;
  std::int32_t id;
  Weight w;
};

/// Incidence lists bucketed by an elimination forest.
///
/// Every edge joins an ancestor and a descendant. At each vertex the edges
/// leading down come first, then the edges leading up ordered by decreasing
/// preorder time of the ancestor. For a view that is a union of complete
/// subtrees, the edges of a member v that stay inside the view are therefore
/// a prefix of v's list, found without touching any edge that leaves it.
class ForestAdjacency {
 public:
  /// Throws InputError if the forest is not an elimination forest of g.
  ForestAdjacency(const Graph& g, const EliminationForest& f);

  const Graph& graph() const { return *g_; }
  const EliminationForest& forest() const { return *f_; }

  /// Out-edges of v (incident edges when undirected) with both ends in view.
  std::span<const EdgeRef> out(Vertex v, const VertexSetView& view, CostLedger* ledger = nullptr) const {
    return prefix(out_[v], out_down_[v], v, view, ledger);
  }
  /// In-edges of v with both ends in view; same as out() when undirected.
  std::span<const EdgeRef> in(Vertex v, const VertexSetView& view, CostLedger* ledger = nullptr) const {
    if (!g_->directed()) return out(v, view, ledger);
    return prefix(in_[v], in_down_[v], v, view, ledger);
  }

 private:
  std::span<const EdgeRef> prefix(const std::vector<EdgeRef>& list, std::size_t down, Vertex v,
                                  const VertexSetView& view, CostLedger* ledger) const;

  const Graph* g_;
  const EliminationForest* f_;
  std::vector<std::vector<EdgeRef>> out_, in_;
  std::vector<std::size_t> out_down_, in_down_;
};

/// The edges of G[view] incident to v, each reported once for v (an
/// undirected edge shows up again at its other end).
/// Throws ContractViolation when v is not in the view.
std::span<const EdgeRef> induced_degree_scan(const ForestAdjacency& adj, const VertexSetView& view,
                                             Vertex v, CostLedger* ledger = nullptr);

}  // namespace tdsolve
