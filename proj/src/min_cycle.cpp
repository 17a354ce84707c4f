#include "tdsolve/min_cycle.hpp"

#include <unordered_set>

#include "tdsolve/framework.hpp"
#include "view_dijkstra.hpp"

namespace tdsolve {

std::optional<std::string> check_cycle(const Graph& g, const CycleResult& c) {
  if (c.acyclic()) return c.cycle.empty() ? std::nullopt : std::optional<std::string>("acyclic result lists vertices");
  const std::size_t min_len = g.directed() ? 2 : 3;
  if (c.cycle.size() < min_len) return "cycle is too short";
  std::unordered_set<Vertex> seen;
  Weight total = 0;
  for (std::size_t i = 0; i < c.cycle.size(); ++i) {
    Vertex u = c.cycle[i], v = c.cycle[(i + 1) % c.cycle.size()];
    if (u < 0 || u >= g.num_vertices()) return "cycle vertex out of range";
    if (!seen.insert(u).second) return "cycle repeats vertex " + std::to_string(u);
    auto id = g.find_edge(u, v);
    if (!id) return "cycle uses missing edge " + std::to_string(u) + "-" + std::to_string(v);
    total = checked_add(total, g.edge(*id).w);
  }
  if (total != *c.weight) return "stated cycle weight is wrong";
  return std::nullopt;
}

namespace {

Weight walk_weight(const Graph& g, const std::vector<Vertex>& cycle) {
  Weight total = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    total = checked_add(total, g.edge(*g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()])).w);
  return total;
}

bool better(const CycleResult& a, const CycleResult& b) {
  return a.weight && (!b.weight || *a.weight < *b.weight);
}

}  // namespace

CycleResult min_cycle_through(const ForestAdjacency& adj, Vertex x, const CycleResult& best, CostLedger* ledger) {
  const Graph& g = adj.graph();
  const VertexSetView whole = adj.forest().subtree(x);
  if (ledger) ledger->vertex_touches += whole.size();
  const Weight bound = best.weight.value_or(kInfinity);

  detail::ViewDijkstra dij(whole);
  // Undirected: the lightest non-tree edge uv, seen once when its later
  // endpoint is settled.
  struct Candidate {
    Weight weight;
    Vertex u, v;
  };
  std::optional<Candidate> found;
  dij.run(
      x, [&](Vertex u) { return adj.out(u, whole, ledger); },
      [&](Vertex u, const EdgeRef& e) -> std::optional<Weight> {
        if (e.w < 0) throw ContractViolation("minimum cycle needs nonnegative weights");
        if (!g.directed() && dij.settled(e.other) && e.id != dij.parent_edge(u)) {
          Weight w = checked_add(checked_add(dij.dist(u), e.w), dij.dist(e.other));
          if (w < bound && (!found || w < found->weight)) found = Candidate{w, u, e.other};
        }
        return e.w;
      });

  if (g.directed()) {
    for (const EdgeRef& e : adj.in(x, whole, ledger)) {
      if (e.w < 0) throw ContractViolation("minimum cycle needs nonnegative weights");
      if (!dij.reached(e.other)) continue;
      Weight w = checked_add(dij.dist(e.other), e.w);
      if (w < bound && (!found || w < found->weight)) found = Candidate{w, e.other, x};
    }
    if (!found) return best;
    CycleResult out{found->weight, dij.path_to(found->u)};
    return out;
  }

  if (!found) return best;
  // A strictly improving candidate closes a simple cycle through x; cutting
  // at the last common tree vertex keeps the witness simple regardless.
  auto pu = dij.path_to(found->u), pv = dij.path_to(found->v);
  std::size_t common = 0;
  while (common < pu.size() && common < pv.size() && pu[common] == pv[common]) ++common;
  std::vector<Vertex> cycle(pu.begin() + (common - 1), pu.end());
  for (std::size_t i = pv.size(); i-- > common;) cycle.push_back(pv[i]);
  CycleResult out{walk_weight(g, cycle), std::move(cycle)};
  return better(out, best) ? out : best;
}

CycleRun min_weight_cycle_td(const ForestAdjacency& adj) {
  if (adj.graph().has_negative_weight()) throw InputError("minimum cycle needs nonnegative weights");
  ProblemInstance<CycleResult> p;
  p.base = [] { return CycleResult{}; };
  p.increment = [](Context& ctx, const VertexSetView&, CycleResult best, Vertex x) {
    return min_cycle_through(ctx.adjacency(), x, best, &ctx.ledger());
  };
  p.unite = [](Context&, std::vector<std::pair<VertexSetView, CycleResult>> parts) {
    CycleResult out;
    for (auto& part : parts)
      if (better(part.second, out)) out = std::move(part.second);
    return out;
  };
  auto run = compute(adj, p);
  return {std::move(run.value), run.ledger};
}

CycleResult min_weight_cycle_td(const Graph& g, const EliminationForest& forest) {
  ForestAdjacency adj(g, forest);
  return min_weight_cycle_td(adj).result;
}

}  // namespace tdsolve
