#include "tdsolve/replacement.hpp"

#include <algorithm>
#include <queue>

#include "tdsolve/framework.hpp"
#include "view_dijkstra.hpp"

namespace tdsolve {

namespace {

Weight plus_inf(Weight a, Weight b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return checked_add(a, b);
}

}  // namespace

PathContext PathContext::build(const Graph& g, std::vector<Vertex> path) {
  if (path.empty()) throw InputError("path is empty");
  if (g.has_negative_weight()) throw InputError("replacement paths need nonnegative weights");
  PathContext c;
  c.index_of.assign(g.num_vertices(), -1);
  c.on_path.assign(g.num_edges(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    Vertex v = path[i];
    if (v < 0 || v >= g.num_vertices()) throw InputError("path vertex out of range");
    if (c.index_of[v] != -1) throw InputError("path repeats vertex " + std::to_string(v));
    c.index_of[v] = static_cast<std::int32_t>(i);
  }
  c.pref.assign(path.size(), 0);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto id = g.find_edge(path[i], path[i + 1]);
    if (!id)
      throw InputError("path step " + std::to_string(path[i]) + "->" + std::to_string(path[i + 1]) + " is not an edge");
    c.on_path[*id] = 1;
    c.pref[i + 1] = checked_add(c.pref[i], g.edge(*id).w);
  }
  c.suf.resize(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) c.suf[i] = c.pref.back() - c.pref[i];

  // Compare against the true distance, using the graph's own adjacency.
  std::vector<Weight> dist(g.num_vertices(), kInfinity);
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[path.front()] = 0;
  heap.push({0, path.front()});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (auto id : g.out_edges(u)) {
      Vertex v = g.other(id, u);
      Weight nd = checked_add(d, g.edge(id).w);
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.push({nd, v});
      }
    }
  }
  if (dist[path.back()] != c.pref.back())
    throw InputError("path has length " + std::to_string(c.pref.back()) + " but the shortest s-t distance is " +
                     std::to_string(dist[path.back()]));
  c.path = std::move(path);
  return c;
}

Weight table_value(const ReplacementTable& t, std::int32_t i) {
  auto it = std::upper_bound(t.begin(), t.end(), i, [](std::int32_t v, const ReplacementEntry& e) { return v < e.index; });
  return it == t.begin() ? kInfinity : std::prev(it)->value;
}

ReplacementTable replacement_increment(const ForestAdjacency& adj, const PathContext& ctx,
                                       const ReplacementTable& below, Vertex x, CostLedger* ledger) {
  const VertexSetView whole = adj.forest().subtree(x);
  if (ledger) ledger->vertex_touches += whole.size();
  ReplacementTable t = below;
  if (const auto ix = ctx.index_of[x]; ix >= 0) {
    ReplacementEntry e{ix, table_value(below, ix)};
    t.insert(std::upper_bound(t.begin(), t.end(), ix,
                              [](std::int32_t v, const ReplacementEntry& en) { return v < en.index; }),
             e);
  }

  auto off_path = [&](Vertex, const EdgeRef& e) -> std::optional<Weight> {
    if (ctx.on_path[e.id]) return std::nullopt;
    return e.w;
  };
  detail::ViewDijkstra from_x(whole), backward(whole);
  from_x.run(x, [&](Vertex u) { return adj.out(u, whole, ledger); }, off_path);
  // Undirected distances are symmetric, so one search serves both ways.
  if (adj.graph().directed()) backward.run(x, [&](Vertex u) { return adj.in(u, whole, ledger); }, off_path);
  const detail::ViewDijkstra& to_x = adj.graph().directed() ? backward : from_x;

  // Detours through x: leave P at some a <= i, reach x, rejoin at some b > i.
  const std::size_t k = t.size();
  std::vector<Weight> best_in(k), best_out(k + 1, kInfinity);
  Weight running = kInfinity;
  for (std::size_t j = 0; j < k; ++j) {
    const auto a = t[j].index;
    running = std::min(running, plus_inf(ctx.pref[a], to_x.dist(ctx.path[a])));
    best_in[j] = running;
  }
  for (std::size_t j = k; j-- > 0;) {
    const auto b = t[j].index;
    best_out[j] = std::min(best_out[j + 1], plus_inf(from_x.dist(ctx.path[b]), ctx.suf[b]));
  }
  for (std::size_t j = 0; j < k; ++j)
    if (t[j].index < ctx.last()) t[j].value = std::min(t[j].value, plus_inf(best_in[j], best_out[j + 1]));
  return t;
}

namespace {

// Binary min-heap over c slots with positional handles, so a slot's value
// can be changed in O(log c).
class SlotHeap {
 public:
  explicit SlotHeap(std::size_t c) : value_(c, kInfinity), heap_(c), where_(c) {
    for (std::size_t i = 0; i < c; ++i) heap_[i] = where_[i] = i;
  }

  void set(std::size_t slot, Weight v) {
    const Weight old = value_[slot];
    value_[slot] = v;
    if (v < old) up(where_[slot]);
    else down(where_[slot]);
  }
  Weight min() const { return heap_.empty() ? kInfinity : value_[heap_[0]]; }

 private:
  bool less(std::size_t a, std::size_t b) const {
    return value_[heap_[a]] < value_[heap_[b]] || (value_[heap_[a]] == value_[heap_[b]] && heap_[a] < heap_[b]);
  }
  void swap_at(std::size_t a, std::size_t b) {
    std::swap(heap_[a], heap_[b]);
    where_[heap_[a]] = a;
    where_[heap_[b]] = b;
  }
  void up(std::size_t i) {
    while (i > 0 && less(i, (i - 1) / 2)) {
      swap_at(i, (i - 1) / 2);
      i = (i - 1) / 2;
    }
  }
  void down(std::size_t i) {
    while (true) {
      std::size_t m = i, l = 2 * i + 1, r = l + 1;
      if (l < heap_.size() && less(l, m)) m = l;
      if (r < heap_.size() && less(r, m)) m = r;
      if (m == i) return;
      swap_at(i, m);
      i = m;
    }
  }

  std::vector<Weight> value_;
  std::vector<std::size_t> heap_, where_;
};

}  // namespace

ReplacementTable replacement_union(const PathContext&, const std::vector<ReplacementTable>& parts) {
  if (parts.size() == 1) return parts.front();
  // k-way merge by path index; each index belongs to exactly one part.
  using Cursor = std::pair<std::int32_t, std::size_t>;  // (next index, part)
  std::priority_queue<Cursor, std::vector<Cursor>, std::greater<>> next;
  std::vector<std::size_t> pos(parts.size(), 0);
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (!parts[j].empty()) next.push({parts[j][0].index, j});
  SlotHeap current(parts.size());
  ReplacementTable out;
  while (!next.empty()) {
    auto [index, j] = next.top();
    next.pop();
    current.set(j, parts[j][pos[j]].value);
    out.push_back({index, current.min()});
    if (++pos[j] < parts[j].size()) next.push({parts[j][pos[j]].index, j});
  }
  return out;
}

ReplacementRun replacement_paths_td(const ForestAdjacency& adj, const PathContext& ctx,
                                    const ReplacementObserver& observer) {
  require(static_cast<Vertex>(ctx.index_of.size()) == adj.graph().num_vertices(), "path context is for another graph");
  ProblemInstance<ReplacementTable> p;
  p.base = [] { return ReplacementTable{}; };
  p.increment = [&](Context& c, const VertexSetView&, ReplacementTable below, Vertex x) {
    return replacement_increment(c.adjacency(), ctx, below, x, &c.ledger());
  };
  p.unite = [&](Context&, std::vector<std::pair<VertexSetView, ReplacementTable>> parts) {
    std::vector<ReplacementTable> tables;
    tables.reserve(parts.size());
    for (auto& part : parts) tables.push_back(std::move(part.second));
    return replacement_union(ctx, tables);
  };
  if (observer)
    p.after_increment = [&](Context&, const VertexSetView& whole, const ReplacementTable& t, Vertex) {
      observer(whole, t);
    };
  auto run = compute(adj, p);
  ReplacementRun out;
  out.ledger = run.ledger;
  for (std::int32_t i = 0; i < ctx.last(); ++i) out.values.push_back(table_value(run.value, i));
  return out;
}

std::vector<Weight> replacement_paths_td(const Graph& g, const EliminationForest& forest,
                                         const std::vector<Vertex>& path) {
  PathContext ctx = PathContext::build(g, path);
  ForestAdjacency adj(g, forest);
  return replacement_paths_td(adj, ctx).values;
}

}  // namespace tdsolve
