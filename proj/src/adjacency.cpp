#include "tdsolve/adjacency.hpp"

#include <algorithm>

namespace tdsolve {

namespace {

void bucket(std::vector<EdgeRef>& list, std::size_t& down, Vertex v, const EliminationForest& f) {
  auto mid = std::stable_partition(list.begin(), list.end(),
                                   [&](const EdgeRef& e) { return f.is_ancestor(v, e.other); });
  down = static_cast<std::size_t>(mid - list.begin());
  std::stable_sort(mid, list.end(),
                   [&](const EdgeRef& a, const EdgeRef& b) { return f.tin(a.other) > f.tin(b.other); });
}

}  // namespace

ForestAdjacency::ForestAdjacency(const Graph& g, const EliminationForest& f) : g_(&g), f_(&f) {
  if (auto bad = validate_forest(g, f)) {
    const Edge& e = g.edge(*bad);
    throw InputError("forest is not an elimination forest: edge " + std::to_string(e.u) + "-" +
                     std::to_string(e.v) + " joins two unrelated vertices");
  }
  const Vertex n = g.num_vertices();
  out_.resize(n);
  out_down_.resize(n);
  if (g.directed()) {
    in_.resize(n);
    in_down_.resize(n);
  }
  for (Vertex v = 0; v < n; ++v) {
    for (auto id : g.out_edges(v)) out_[v].push_back({g.other(id, v), id, g.edge(id).w});
    bucket(out_[v], out_down_[v], v, f);
    if (g.directed()) {
      for (auto id : g.in_edges(v)) in_[v].push_back({g.other(id, v), id, g.edge(id).w});
      bucket(in_[v], in_down_[v], v, f);
    }
  }
}

std::span<const EdgeRef> ForestAdjacency::prefix(const std::vector<EdgeRef>& list, std::size_t down,
                                                 Vertex v, const VertexSetView& view,
                                                 CostLedger* ledger) const {
  require(view.contains(v), "vertex " + std::to_string(v) + " is outside the view");
  std::size_t end = down;
  while (end < list.size() && f_->tin(list[end].other) >= view.lo()) ++end;
  // The probe that stops the scan counts as a touch.
  if (ledger) ledger->edge_touches += end + (end < list.size());
  return std::span<const EdgeRef>(list.data(), end);
}

std::span<const EdgeRef> induced_degree_scan(const ForestAdjacency& adj, const VertexSetView& view,
                                             Vertex v, CostLedger* ledger) {
  require(v >= 0 && v < adj.graph().num_vertices() && view.contains(v), "vertex is not in the view");
  return adj.out(v, view, ledger);
}

}  // namespace tdsolve
