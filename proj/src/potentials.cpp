#include "tdsolve/potentials.hpp"

#include <algorithm>
#include <unordered_set>

#include "tdsolve/framework.hpp"
#include "view_dijkstra.hpp"

namespace tdsolve {

std::optional<std::string> check_potential(const Graph& g, const Potential& p, const VertexSetView* view) {
  if (static_cast<Vertex>(p.size()) != g.num_vertices()) return "potential has the wrong size";
  for (const Edge& e : g.edges()) {
    if (view && (!view->contains(e.u) || !view->contains(e.v))) continue;
    __int128 reduced = static_cast<__int128>(e.w) + p[e.u] - p[e.v];
    if (reduced < 0 || (!g.directed() && static_cast<__int128>(e.w) + p[e.v] - p[e.u] < 0))
      return "edge " + std::to_string(e.u) + "->" + std::to_string(e.v) + " has negative reduced weight";
  }
  return std::nullopt;
}

std::optional<std::string> check_negative_cycle(const Graph& g, const NegativeCycle& c) {
  const auto& cyc = c.vertices;
  if (cyc.size() < 2) return "cycle has fewer than two vertices";
  std::unordered_set<Vertex> seen;
  __int128 total = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    Vertex u = cyc[i], v = cyc[(i + 1) % cyc.size()];
    if (u < 0 || u >= g.num_vertices()) return "cycle vertex out of range";
    if (!seen.insert(u).second) return "cycle repeats vertex " + std::to_string(u);
    auto id = g.find_edge(u, v);
    if (!id) return "cycle uses missing edge " + std::to_string(u) + "->" + std::to_string(v);
    total += g.edge(*id).w;
  }
  if (!g.directed() && cyc.size() < 3) return "undirected cycle reuses its only edge";
  if (total != c.weight) return "stated cycle weight is wrong";
  if (total >= 0) return "cycle is not negative";
  return std::nullopt;
}

namespace {

using Slice = std::vector<Weight>;  // potential per position of a view
using SliceOrCycle = std::variant<Slice, NegativeCycle>;

// Potential on G[subtree(x)] from values on below(x), following the
// construction that drops the edges into x, raises x just enough to make
// its out-edges nonnegative and runs Dijkstra from x.
template <class Below>
SliceOrCycle extend(const ForestAdjacency& adj, Vertex x, Below&& below_p, CostLedger* ledger) {
  const Graph& g = adj.graph();
  const VertexSetView whole = adj.forest().subtree(x);
  auto members = whole.vertices();
  if (ledger) ledger->vertex_touches += members.size();

  Slice p(members.size());
  Weight lift = 0;
  for (const EdgeRef& e : adj.out(x, whole, ledger)) lift = std::max(lift, checked_sub(below_p(e.other), e.w));
  p[0] = lift;
  for (std::size_t i = 1; i < members.size(); ++i) p[i] = below_p(members[i]);
  auto pot = [&](Vertex v) { return p[whole.offset(v)]; };
  auto reduced = [&](Vertex u, const EdgeRef& e) { return checked_sub(checked_add(e.w, pot(u)), pot(e.other)); };

  detail::ViewDijkstra dij(whole);
  dij.run(
      x, [&](Vertex u) { return adj.out(u, whole, ledger); },
      [&](Vertex u, const EdgeRef& e) -> std::optional<Weight> {
        if (e.other == x) return std::nullopt;
        return reduced(u, e);
      });

  std::optional<EdgeRef> closing;
  Weight worst = 0;
  for (const EdgeRef& e : adj.in(x, whole, ledger)) {
    if (!dij.reached(e.other)) continue;
    Weight val = checked_add(dij.dist(e.other), reduced(e.other, EdgeRef{x, e.id, e.w}));
    if (val < worst) {
      worst = val;
      closing = e;
    }
  }
  if (closing) {
    NegativeCycle c;
    c.vertices = dij.path_to(closing->other);
    Weight total = closing->w;
    for (std::size_t i = 1; i < c.vertices.size(); ++i) total = checked_add(total, g.edge(dij.parent_edge(c.vertices[i])).w);
    c.weight = total;
    return c;
  }

  Weight raise = 0;
  for (Vertex u : members) {
    if (dij.reached(u)) continue;
    for (const EdgeRef& e : adj.out(u, whole, ledger))
      if (dij.reached(e.other)) raise = std::max(raise, checked_sub(dij.dist(e.other), reduced(u, e)));
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    p[i] = checked_add(p[i], dij.reached(members[i]) ? dij.dist(members[i]) : raise);
  return p;
}

}  // namespace

PotentialOrCycle increment_potential(const ForestAdjacency& adj, const Potential& below_p, Vertex x,
                                     CostLedger* ledger) {
  const Graph& g = adj.graph();
  require(g.directed(), "potentials need a directed graph");
  require(x >= 0 && x < g.num_vertices(), "vertex out of range");
  const VertexSetView below = adj.forest().below(x);
  if (auto bad = check_potential(g, below_p, &below)) throw ContractViolation("invalid potential on X: " + *bad);
  auto r = extend(adj, x, [&](Vertex v) { return below_p[v]; }, ledger);
  if (auto* c = std::get_if<NegativeCycle>(&r)) return *c;
  Potential out = below_p;
  const VertexSetView whole = adj.forest().subtree(x);
  const Slice& s = std::get<Slice>(r);
  for (std::size_t i = 0; i < s.size(); ++i) out[whole.vertices()[i]] = s[i];
  return out;
}

PotentialRun potential_or_negcycle_td(const ForestAdjacency& adj) {
  require(adj.graph().directed(), "potentials need a directed graph");
  ProblemInstance<SliceOrCycle> p;
  p.base = [] { return SliceOrCycle{Slice{}}; };
  p.increment = [](Context& ctx, const VertexSetView& below, SliceOrCycle value, Vertex x) -> SliceOrCycle {
    if (std::holds_alternative<NegativeCycle>(value)) return value;
    const Slice& s = std::get<Slice>(value);
    return extend(ctx.adjacency(), x, [&](Vertex v) { return s[below.offset(v)]; }, &ctx.ledger());
  };
  p.unite = [](Context&, std::vector<std::pair<VertexSetView, SliceOrCycle>> parts) -> SliceOrCycle {
    if (parts.size() == 1) return std::move(parts.front().second);
    Slice out;
    for (auto& [view, value] : parts) {
      if (std::holds_alternative<NegativeCycle>(value)) return std::move(value);
      const Slice& s = std::get<Slice>(value);
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  };
  auto run = compute(adj, p);
  if (auto* c = std::get_if<NegativeCycle>(&run.value)) return {*c, run.ledger};
  const Slice& s = std::get<Slice>(run.value);
  auto order = adj.forest().preorder();
  Potential pot(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pot[order[i]] = s[i];
  return {std::move(pot), run.ledger};
}

PotentialOrCycle potential_or_negcycle_td(const Graph& g, const EliminationForest& forest) {
  ForestAdjacency adj(g, forest);
  return potential_or_negcycle_td(adj).result;
}

PathsOrCycle sssp_td(const Graph& g, const EliminationForest& forest, Vertex s) {
  require(s >= 0 && s < g.num_vertices(), "source out of range");
  ForestAdjacency adj(g, forest);
  auto run = potential_or_negcycle_td(adj);
  if (auto* c = std::get_if<NegativeCycle>(&run.result)) return *c;
  const Potential& p = std::get<Potential>(run.result);

  const VertexSetView all = forest.whole();
  detail::ViewDijkstra dij(all);
  dij.run(
      s, [&](Vertex u) { return adj.out(u, all); },
      [&](Vertex u, const EdgeRef& e) -> std::optional<Weight> {
        return checked_sub(checked_add(e.w, p[u]), p[e.other]);
      });
  ShortestPathTree tree;
  tree.source = s;
  tree.dist.assign(g.num_vertices(), kInfinity);
  tree.parent.assign(g.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!dij.reached(v)) continue;
    tree.dist[v] = checked_add(checked_sub(dij.dist(v), p[s]), p[v]);
    tree.parent[v] = dij.parent(v);
  }
  return tree;
}

}  // namespace tdsolve
