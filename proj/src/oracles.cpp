#include "tdsolve/oracles.hpp"

#include <algorithm>
#include <functional>

namespace tdsolve::oracle {

namespace {

void refuse_above(const Graph& g, Vertex limit, const char* what) {
  if (g.num_vertices() > limit)
    throw RefusalError(std::string(what) + " refuses graphs with more than " + std::to_string(limit) + " vertices");
}

// Calls visit(pairs, weight) for every matching (every perfect one when
// perfect_only is set).
void each_matching(const Graph& g, bool perfect_only,
                   const std::function<void(const std::vector<std::pair<Vertex, Vertex>>&, Weight)>& visit) {
  const Vertex n = g.num_vertices();
  std::vector<std::vector<std::optional<Weight>>> w(n, std::vector<std::optional<Weight>>(n));
  for (const Edge& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = e.w;
  std::vector<char> used(n, 0);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::function<void(Vertex, Weight)> go = [&](Vertex from, Weight total) {
    Vertex v = from;
    while (v < n && used[v]) ++v;
    if (v == n) {
      visit(pairs, total);
      return;
    }
    used[v] = 1;
    if (!perfect_only) go(v + 1, total);
    for (Vertex u = v + 1; u < n; ++u) {
      if (used[u] || !w[v][u]) continue;
      used[u] = 1;
      pairs.emplace_back(v, u);
      go(v + 1, total + *w[v][u]);
      pairs.pop_back();
      used[u] = 0;
    }
    used[v] = 0;
  };
  go(0, 0);
}

Matching as_matching(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  Matching m{pairs};
  m.normalize();
  return m;
}

}  // namespace

MatchingAnswer brute_max_matching(const Graph& g) {
  refuse_above(g, kMatchingLimit, "brute_max_matching");
  MatchingAnswer best{-1, {}};
  each_matching(g, false, [&](const auto& pairs, Weight) {
    if (static_cast<Weight>(pairs.size()) > best.weight) best = {static_cast<Weight>(pairs.size()), as_matching(pairs)};
  });
  return best;
}

std::optional<MatchingAnswer> brute_mwpm(const Graph& g) {
  refuse_above(g, kMatchingLimit, "brute_mwpm");
  std::optional<MatchingAnswer> best;
  each_matching(g, true, [&](const auto& pairs, Weight w) {
    if (!best || w > best->weight) best = MatchingAnswer{w, as_matching(pairs)};
  });
  return best;
}

MatchingAnswer brute_max_weight_matching(const Graph& g) {
  refuse_above(g, kMatchingLimit, "brute_max_weight_matching");
  std::optional<MatchingAnswer> best;
  each_matching(g, false, [&](const auto& pairs, Weight w) {
    if (!best || w > best->weight) best = MatchingAnswer{w, as_matching(pairs)};
  });
  return *best;
}

MatchingAnswer brute_max_weight_max_size_matching(const Graph& g) {
  refuse_above(g, kMatchingLimit, "brute_max_weight_max_size_matching");
  std::optional<MatchingAnswer> best;
  std::size_t best_size = 0;
  each_matching(g, false, [&](const auto& pairs, Weight w) {
    if (!best || pairs.size() > best_size || (pairs.size() == best_size && w > best->weight)) {
      best = MatchingAnswer{w, as_matching(pairs)};
      best_size = pairs.size();
    }
  });
  return *best;
}

namespace {

// Arcs as (from, to, weight); undirected edges give both directions.
std::vector<Edge> arcs_of(const Graph& g) {
  std::vector<Edge> arcs;
  for (const Edge& e : g.edges()) {
    arcs.push_back(e);
    if (!g.directed()) arcs.push_back({e.v, e.u, e.w});
  }
  return arcs;
}

}  // namespace

BellmanFordAnswer bellman_ford(const Graph& g, Vertex s) {
  const Vertex n = g.num_vertices();
  require(s >= 0 && s < n, "source out of range");
  auto arcs = arcs_of(g);
  BellmanFordAnswer out;

  // Verdict: every vertex starts at 0, as if joined to a virtual source.
  std::vector<Weight> d(n, 0);
  std::vector<Vertex> pred(n, kNoVertex);
  Vertex last = kNoVertex;
  for (Vertex round = 0; round < n; ++round) {
    last = kNoVertex;
    for (const Edge& a : arcs)
      if (d[a.u] + a.w < d[a.v]) {
        d[a.v] = d[a.u] + a.w;
        pred[a.v] = a.u;
        last = a.v;
      }
    if (last == kNoVertex) break;
  }
  if (last != kNoVertex) {
    for (Vertex i = 0; i < n; ++i) last = pred[last];
    Vertex v = last;
    do {
      out.cycle.push_back(v);
      v = pred[v];
    } while (v != last);
    std::reverse(out.cycle.begin(), out.cycle.end());
    out.negative_cycle = true;
    return out;
  }

  out.dist.assign(n, std::nullopt);
  out.dist[s] = 0;
  for (Vertex round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (const Edge& a : arcs)
      if (out.dist[a.u] && (!out.dist[a.v] || *out.dist[a.u] + a.w < *out.dist[a.v])) {
        out.dist[a.v] = *out.dist[a.u] + a.w;
        changed = true;
      }
    if (!changed) break;
  }
  return out;
}

std::vector<std::optional<Weight>> dijkstra_dense(const Graph& g, Vertex s, const std::vector<char>* removed) {
  const Vertex n = g.num_vertices();
  std::vector<std::optional<Weight>> dist(n);
  std::vector<char> done(n, 0);
  dist[s] = 0;
  for (Vertex round = 0; round < n; ++round) {
    Vertex u = kNoVertex;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && dist[v] && (u == kNoVertex || *dist[v] < *dist[u])) u = v;
    if (u == kNoVertex) break;
    done[u] = 1;
    for (auto id : g.out_edges(u)) {
      if (removed && (*removed)[id]) continue;
      Vertex v = g.other(id, u);
      Weight cand = *dist[u] + g.edge(id).w;
      if (!dist[v] || cand < *dist[v]) dist[v] = cand;
    }
  }
  return dist;
}

std::vector<std::vector<std::optional<Weight>>> all_pairs_dijkstra(const Graph& g) {
  std::vector<std::vector<std::optional<Weight>>> out;
  for (Vertex s = 0; s < g.num_vertices(); ++s) out.push_back(dijkstra_dense(g, s));
  return out;
}

std::vector<std::vector<std::optional<Weight>>> floyd_warshall(const Graph& g, const std::vector<char>& keep,
                                                               const std::vector<char>& removed) {
  const Vertex n = g.num_vertices();
  std::vector<std::vector<std::optional<Weight>>> d(n, std::vector<std::optional<Weight>>(n));
  for (Vertex v = 0; v < n; ++v)
    if (keep[v]) d[v][v] = 0;
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (removed[id] || !keep[e.u] || !keep[e.v]) continue;
    auto relax = [&](Vertex a, Vertex b) {
      if (!d[a][b] || e.w < *d[a][b]) d[a][b] = e.w;
    };
    relax(e.u, e.v);
    if (!g.directed()) relax(e.v, e.u);
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (Vertex j = 0; j < n; ++j)
        if (d[k][j] && (!d[i][j] || *d[i][k] + *d[k][j] < *d[i][j])) d[i][j] = *d[i][k] + *d[k][j];
    }
  return d;
}

std::vector<std::optional<Weight>> naive_replacement(const Graph& g, const std::vector<Vertex>& path) {
  std::vector<std::optional<Weight>> out;
  if (path.size() < 2) return out;
  std::vector<char> removed(g.num_edges(), 0);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto id = g.find_edge(path[i], path[i + 1]);
    require(id.has_value(), "path uses a missing edge");
    removed[*id] = 1;
    out.push_back(dijkstra_dense(g, path.front(), &removed)[path.back()]);
    removed[*id] = 0;
  }
  return out;
}

CycleAnswer brute_min_cycle(const Graph& g) {
  refuse_above(g, kCycleLimit, "brute_min_cycle");
  const Vertex n = g.num_vertices();
  const std::size_t min_len = g.directed() ? 2 : 3;
  CycleAnswer best;
  std::vector<char> on(n, 0);
  std::vector<Vertex> path;
  // Cycles are enumerated from their smallest vertex s.
  std::function<void(Vertex, Vertex, Weight)> extend = [&](Vertex s, Vertex u, Weight total) {
    for (auto id : g.out_edges(u)) {
      Vertex v = g.other(id, u);
      Weight w = total + g.edge(id).w;
      if (v == s) {
        if (path.size() >= min_len && (!best.weight || w < *best.weight)) {
          best.weight = w;
          best.cycle = path;
        }
      } else if (v > s && !on[v]) {
        on[v] = 1;
        path.push_back(v);
        extend(s, v, w);
        path.pop_back();
        on[v] = 0;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    path = {s};
    extend(s, s, 0);
    on[s] = 0;
  }
  return best;
}

PathsAnswer brute_disjoint_a_paths(const Graph& g, const std::vector<Vertex>& terminals) {
  refuse_above(g, kPathsLimit, "brute_disjoint_a_paths");
  require(g.directed(), "A-paths are directed");
  const Vertex n = g.num_vertices();
  std::vector<char> is_terminal(n, 0);
  for (Vertex a : terminals) {
    require(a >= 0 && a < n, "terminal out of range");
    is_terminal[a] = 1;
  }

  struct Candidate {
    unsigned mask;
    Weight weight;
    std::vector<Vertex> path;
  };
  std::vector<Candidate> all;
  std::vector<Vertex> path;
  std::function<void(Vertex, unsigned, Weight)> grow = [&](Vertex u, unsigned mask, Weight total) {
    for (auto id : g.out_edges(u)) {
      Vertex v = g.edge(id).v;
      if (mask >> v & 1U) continue;
      path.push_back(v);
      if (is_terminal[v]) all.push_back({mask | 1U << v, total + g.edge(id).w, path});
      else grow(v, mask | 1U << v, total + g.edge(id).w);
      path.pop_back();
    }
  };
  for (Vertex a = 0; a < n; ++a)
    if (is_terminal[a]) {
      path = {a};
      grow(a, 1U << a, 0);
    }

  struct Best {
    std::size_t count = 0;
    Weight weight = 0;
    int pick = -1;  // candidate index, or -1 for "lowest vertex unused"
  };
  const unsigned full = (1U << n) - 1;
  std::vector<Best> best(full + 1);
  for (unsigned mask = 1; mask <= full; ++mask) {
    unsigned low = mask & (~mask + 1);
    Best b = best[mask ^ low];
    b.pick = -1;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Candidate& c = all[i];
      if (!(c.mask & low) || (c.mask & ~mask)) continue;
      const Best& rest = best[mask ^ c.mask];
      std::size_t cnt = rest.count + 1;
      Weight w = rest.weight + c.weight;
      if (cnt > b.count || (cnt == b.count && w < b.weight)) b = {cnt, w, static_cast<int>(i)};
    }
    best[mask] = b;
  }
  PathsAnswer out{best[full].count, best[full].weight, {}};
  for (unsigned mask = full; mask != 0;) {
    const Best& b = best[mask];
    if (b.pick < 0) {
      mask &= mask - 1;
    } else {
      out.paths.push_back(all[b.pick].path);
      mask ^= all[b.pick].mask;
    }
  }
  return out;
}

}  // namespace tdsolve::oracle
