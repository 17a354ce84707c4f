#include "tdsolve/reductions.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "tdsolve/weighted_matching.hpp"

namespace tdsolve {

MatchingReduction reduce_max_weight_matching(const Graph& g, const EliminationForest& forest) {
  require(!g.directed(), "matching reductions need an undirected graph");
  require(forest.size() == g.num_vertices(), "forest and graph sizes differ");
  const Vertex n = g.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(2 * g.num_edges() + n);
  for (const Edge& e : g.edges()) edges.push_back(e);
  for (const Edge& e : g.edges()) edges.push_back({n + e.u, n + e.v, e.w});
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, n + v, 0});

  std::vector<std::optional<Vertex>> parent(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    if (auto p = forest.parent(v)) parent[v] = n + *p;
    parent[n + v] = v;
  }
  return {Graph(2 * n, false, std::move(edges)), EliminationForest(std::move(parent)), n};
}

Matching MatchingReduction::extract(const Matching& reduced) const {
  Matching m;
  for (auto [u, v] : reduced.edges)
    if (u < original_vertices && v < original_vertices) m.edges.emplace_back(u, v);
  m.normalize();
  return m;
}

Weight max_size_shift(const Graph& g) {
  __int128 total = 1;
  for (const Edge& e : g.edges()) {
    total += e.w < 0 ? -static_cast<__int128>(e.w) : static_cast<__int128>(e.w);
    if (total > std::numeric_limits<Weight>::max()) throw OverflowError("weight shift does not fit in 64 bits");
  }
  return static_cast<Weight>(total);
}

Graph shift_for_max_size(const Graph& g) {
  const Weight shift = max_size_shift(g);
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.w = checked_add(e.w, shift);
  return Graph(g.num_vertices(), g.directed(), std::move(edges));
}

Matching max_weight_matching_td(const Graph& g, const EliminationForest& forest) {
  MatchingReduction r = reduce_max_weight_matching(g, forest);
  return r.extract(mwpm_td(r.graph, r.forest).matching);
}

Matching max_weight_max_size_matching_td(const Graph& g, const EliminationForest& forest) {
  return max_weight_matching_td(shift_for_max_size(g), forest);
}

APathReduction reduce_disjoint_a_paths(const Graph& g, const std::vector<Vertex>& terminals,
                                       const EliminationForest& forest) {
  require(g.directed(), "A-paths need a directed graph");
  require(forest.size() == g.num_vertices(), "forest and graph sizes differ");
  const Vertex n = g.num_vertices();
  APathReduction r;
  r.original = &g;
  r.terminal.assign(n, 0);
  for (Vertex a : terminals) {
    if (a < 0 || a >= n) throw InputError("terminal " + std::to_string(a) + " is out of range");
    r.terminal[a] = 1;
  }
  Vertex next = 0;
  r.plus.resize(n);
  r.minus.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    r.plus[v] = next++;
    r.minus[v] = r.terminal[v] ? r.plus[v] : next++;
  }

  std::vector<Edge> edges;
  std::map<std::pair<Vertex, Vertex>, std::size_t> between_terminals;
  for (Vertex v = 0; v < n; ++v)
    if (!r.terminal[v]) {
      edges.push_back({r.plus[v], r.minus[v], 0});
      r.arc.push_back(-1);
    }
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (e.w < 0) throw InputError("A-path weights must be nonnegative");
    if (r.terminal[e.u] && r.terminal[e.v]) {
      auto key = std::minmax(e.u, e.v);
      auto [it, fresh] = between_terminals.emplace(key, edges.size());
      if (!fresh) {
        if (e.w < edges[it->second].w) {
          edges[it->second].w = e.w;
          r.arc[it->second] = static_cast<std::int32_t>(id);
        }
        continue;
      }
    }
    edges.push_back({r.plus[e.u], r.minus[e.v], e.w});
    r.arc.push_back(static_cast<std::int32_t>(id));
  }
  r.graph = Graph(next, false, std::move(edges));

  std::vector<std::optional<Vertex>> parent(next);
  for (Vertex v = 0; v < n; ++v) {
    if (auto p = forest.parent(v)) parent[r.plus[v]] = r.minus[*p];
    if (!r.terminal[v]) parent[r.minus[v]] = r.plus[v];
  }
  r.forest = EliminationForest(std::move(parent));
  return r;
}

DisjointPaths extract_a_paths(const APathReduction& r, const Matching& reduced) {
  const Graph& g = *r.original;
  const Vertex n = g.num_vertices();
  std::vector<Vertex> mate = reduced.mates(r.graph.num_vertices());
  std::vector<Vertex> owner(r.graph.num_vertices());
  for (Vertex v = 0; v < n; ++v) owner[r.plus[v]] = owner[r.minus[v]] = v;

  std::vector<Vertex> work;
  for (Vertex v = 0; v < n; ++v)
    if (!r.terminal[v]) work.push_back(v);
  while (!work.empty()) {
    Vertex v = work.back();
    work.pop_back();
    Vertex a = r.plus[v], b = r.minus[v];
    if (mate[a] == b || (mate[a] != kNoVertex && mate[b] != kNoVertex)) continue;
    for (Vertex s : {a, b}) {
      Vertex x = mate[s];
      if (x == kNoVertex) continue;
      mate[x] = kNoVertex;
      if (!r.terminal[owner[x]]) work.push_back(owner[x]);
    }
    mate[a] = b;
    mate[b] = a;
  }

  auto arc_between = [&](Vertex a, Vertex b) -> const Edge& {
    auto id = r.graph.find_edge(a, b);
    require(id && r.arc[*id] >= 0, "matched pair is not an arc");
    return g.edge(r.arc[*id]);
  };
  std::size_t matched = 0, split = 0;
  for (Vertex v = 0; v < r.graph.num_vertices(); ++v)
    if (mate[v] != kNoVertex) ++matched;
  for (Vertex v = 0; v < n; ++v) split += !r.terminal[v];

  DisjointPaths out;
  for (Vertex t = 0; t < n; ++t) {
    if (!r.terminal[t] || mate[r.plus[t]] == kNoVertex) continue;
    const Edge* e = &arc_between(r.plus[t], mate[r.plus[t]]);
    if (e->u != t) continue;
    std::vector<Vertex> path{t};
    while (true) {
      out.weight = checked_add(out.weight, e->w);
      Vertex cur = e->v;
      path.push_back(cur);
      if (r.terminal[cur]) break;
      e = &arc_between(r.plus[cur], mate[r.plus[cur]]);
    }
    out.paths.push_back(std::move(path));
  }
  if (out.paths.size() != matched / 2 - split) throw std::logic_error("path count disagrees with matching size");
  return out;
}

DisjointPaths min_weight_disjoint_a_paths_td(const Graph& g, const std::vector<Vertex>& terminals,
                                             const EliminationForest& forest) {
  require(g.directed(), "A-paths need a directed graph");
  std::vector<Vertex> distinct = terminals;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  APathReduction r = reduce_disjoint_a_paths(g, distinct, forest);
  if (distinct.size() < 2) return {};

  // Minimum weight among maximum-size matchings, as a maximum-weight matching.
  std::vector<Edge> negated = r.graph.edges();
  for (Edge& e : negated) e.w = -e.w;
  Graph shifted = shift_for_max_size(Graph(r.graph.num_vertices(), false, std::move(negated)));
  Matching m = max_weight_matching_td(shifted, r.forest);
  return extract_a_paths(r, m);
}

}  // namespace tdsolve
