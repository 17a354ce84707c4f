#include "tdsolve/two_hop.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "tdsolve/framework.hpp"
#include "view_dijkstra.hpp"

namespace tdsolve {

std::size_t TwoHopLabels::max_label_size() const {
  std::size_t best = 0;
  for (std::size_t u = 0; u < out.size(); ++u) best = std::max(best, out[u].size() + in[u].size());
  return best;
}

Weight two_hop_query(const TwoHopLabels& labels, Vertex s, Vertex t) {
  require(s >= 0 && s < labels.num_vertices() && t >= 0 && t < labels.num_vertices(), "query vertex out of range");
  const auto& a = labels.out[s];
  const auto& b = labels.in[t];
  Weight best = kInfinity;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].hub < b[j].hub) {
      ++i;
    } else if (b[j].hub < a[i].hub) {
      ++j;
    } else {
      best = std::min(best, checked_add(a[i].dist, b[j].dist));
      ++i;
      ++j;
    }
  }
  return best;
}

std::optional<std::string> check_two_hop(const TwoHopLabels& labels, const EliminationForest& forest) {
  const Vertex n = labels.num_vertices();
  if (static_cast<Vertex>(labels.in.size()) != n || forest.size() != n) return "label count does not match the forest";
  auto check_list = [&](Vertex u, const std::vector<HubEntry>& list) -> std::optional<std::string> {
    bool self = false;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const HubEntry& e = list[i];
      if (e.hub < 0 || e.hub >= n) return "hub out of range at vertex " + std::to_string(u);
      if (i > 0 && list[i - 1].hub >= e.hub) return "labels of vertex " + std::to_string(u) + " are not sorted";
      if (!forest.is_ancestor(e.hub, u)) return "hub " + std::to_string(e.hub) + " is not an ancestor of " + std::to_string(u);
      if (e.dist < 0 || e.dist == kInfinity) return "bad hub distance at vertex " + std::to_string(u);
      if (e.hub == u) self = e.dist == 0;
    }
    if (!self) return "vertex " + std::to_string(u) + " lacks its self entry";
    return std::nullopt;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (auto bad = check_list(u, labels.out[u])) return bad;
    if (auto bad = check_list(u, labels.in[u])) return bad;
  }
  if (labels.max_label_size() > 2 * static_cast<std::size_t>(forest.depth()))
    return "label size " + std::to_string(labels.max_label_size()) + " exceeds twice the depth " +
           std::to_string(forest.depth());
  return std::nullopt;
}

namespace {

// Labels of the vertices of a view, by view position. Hubs are appended
// in the order they are added (deepest first) and sorted at the end.
struct Slice {
  std::vector<std::vector<HubEntry>> out, in;
};

void extend(const ForestAdjacency& adj, Vertex x, Slice& s, CostLedger* ledger) {
  const VertexSetView whole = adj.forest().subtree(x);
  if (ledger) ledger->vertex_touches += whole.size();
  s.out.insert(s.out.begin(), std::vector<HubEntry>{});
  s.in.insert(s.in.begin(), std::vector<HubEntry>{});

  auto step = [](Vertex, const EdgeRef& e) -> std::optional<Weight> { return e.w; };
  detail::ViewDijkstra from_x(whole), backward(whole);
  from_x.run(x, [&](Vertex u) { return adj.out(u, whole, ledger); }, step);
  // Undirected distances are symmetric, so one search serves both ways.
  if (adj.graph().directed()) backward.run(x, [&](Vertex u) { return adj.in(u, whole, ledger); }, step);
  const detail::ViewDijkstra& to_x = adj.graph().directed() ? backward : from_x;
  for (Vertex u : whole.vertices()) {
    const auto at = whole.offset(u);
    if (to_x.reached(u)) s.out[at].push_back({x, to_x.dist(u)});
    if (from_x.reached(u)) s.in[at].push_back({x, from_x.dist(u)});
  }
}

}  // namespace

TwoHopRun build_two_hop_td(const ForestAdjacency& adj) {
  if (adj.graph().has_negative_weight()) throw InputError("2-hop labels need nonnegative weights");
  ProblemInstance<Slice> p;
  p.base = [] { return Slice{}; };
  p.increment = [](Context& ctx, const VertexSetView&, Slice s, Vertex x) {
    extend(ctx.adjacency(), x, s, &ctx.ledger());
    return s;
  };
  p.unite = [](Context&, std::vector<std::pair<VertexSetView, Slice>> parts) {
    if (parts.size() == 1) return std::move(parts.front().second);
    Slice out;
    for (auto& [view, s] : parts) {
      std::move(s.out.begin(), s.out.end(), std::back_inserter(out.out));
      std::move(s.in.begin(), s.in.end(), std::back_inserter(out.in));
    }
    return out;
  };
  auto run = compute(adj, p);

  const auto order = adj.forest().preorder();
  TwoHopRun r;
  r.ledger = run.ledger;
  r.labels.out.resize(order.size());
  r.labels.in.resize(order.size());
  auto by_hub = [](const HubEntry& a, const HubEntry& b) { return a.hub < b.hub; };
  for (std::size_t i = 0; i < order.size(); ++i) {
    r.labels.out[order[i]] = std::move(run.value.out[i]);
    r.labels.in[order[i]] = std::move(run.value.in[i]);
    std::sort(r.labels.out[order[i]].begin(), r.labels.out[order[i]].end(), by_hub);
    std::sort(r.labels.in[order[i]].begin(), r.labels.in[order[i]].end(), by_hub);
  }
  if (auto bad = check_two_hop(r.labels, adj.forest())) throw std::logic_error("2-hop labels broken: " + *bad);
  return r;
}

TwoHopLabels build_two_hop_td(const Graph& g, const EliminationForest& forest) {
  ForestAdjacency adj(g, forest);
  return build_two_hop_td(adj).labels;
}

namespace {

constexpr std::uint8_t kLabelVersion = 1;

template <class T>
void put(std::ostream& os, T v) {
  using U = std::make_unsigned_t<T>;
  auto u = static_cast<U>(v);
  for (std::size_t i = 0; i < sizeof(T); ++i) os.put(static_cast<char>((u >> (8 * i)) & 0xff));
}

template <class T>
T get(std::istream& is) {
  using U = std::make_unsigned_t<T>;
  U u = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    int c = is.get();
    if (c == std::char_traits<char>::eof()) throw InputError("label file is truncated");
    u |= static_cast<U>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return static_cast<T>(u);
}

}  // namespace

void save_labels(std::ostream& os, const TwoHopLabels& labels) {
  put<std::uint8_t>(os, kLabelVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(labels.num_vertices()));
  for (Vertex u = 0; u < labels.num_vertices(); ++u)
    for (const auto* list : {&labels.out[u], &labels.in[u]}) {
      put<std::uint32_t>(os, static_cast<std::uint32_t>(list->size()));
      for (const HubEntry& e : *list) {
        put<std::uint32_t>(os, static_cast<std::uint32_t>(e.hub));
        put<std::int64_t>(os, e.dist);
      }
    }
  if (!os) throw InputError("failed to write labels");
}

TwoHopLabels load_labels(std::istream& is) {
  if (auto v = get<std::uint8_t>(is); v != kLabelVersion)
    throw InputError("unsupported label file version " + std::to_string(v));
  const auto n = get<std::uint32_t>(is);
  if (n > static_cast<std::uint32_t>(std::numeric_limits<Vertex>::max())) throw InputError("label file vertex count too large");
  TwoHopLabels labels;
  labels.out.resize(n);
  labels.in.resize(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (auto* list : {&labels.out[u], &labels.in[u]}) {
      const auto c = get<std::uint32_t>(is);
      if (c > n) throw InputError("label list longer than the vertex count");
      for (std::uint32_t i = 0; i < c; ++i) {
        const auto hub = get<std::uint32_t>(is);
        const auto dist = get<std::int64_t>(is);
        if (hub >= n) throw InputError("hub out of range in label file");
        if (dist < 0) throw InputError("negative distance in label file");
        if (!list->empty() && list->back().hub >= static_cast<Vertex>(hub)) throw InputError("label list is not sorted");
        list->push_back({static_cast<Vertex>(hub), dist});
      }
    }
  if (is.peek() != std::char_traits<char>::eof()) throw InputError("trailing bytes in label file");
  return labels;
}

void save_labels(const std::string& path, const TwoHopLabels& labels) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot open " + path + " for writing");
  save_labels(os, labels);
}

TwoHopLabels load_labels(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open " + path);
  return load_labels(is);
}

}  // namespace tdsolve
