#include "tdsolve/matching.hpp"

#include <algorithm>
#include <deque>

#include "tdsolve/framework.hpp"

namespace tdsolve {

std::vector<Vertex> Matching::mates(Vertex n) const {
  std::vector<Vertex> mate(n, kNoVertex);
  for (auto [u, v] : edges) {
    mate[u] = v;
    mate[v] = u;
  }
  return mate;
}

Weight Matching::weight(const Graph& g) const {
  Weight total = 0;
  for (auto [u, v] : edges) {
    auto id = g.find_edge(u, v);
    require(id.has_value(), "matched pair is not an edge");
    total = checked_add(total, g.edge(*id).w);
  }
  return total;
}

void Matching::normalize() {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
}

Matching Matching::from_mates(std::span<const Vertex> mate) {
  Matching m;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
    if (mate[v] != kNoVertex && v < mate[v]) m.edges.emplace_back(v, mate[v]);
  return m;
}

Matching Matching::from_slice(std::span<const Vertex> vertices, std::span<const Vertex> mate) {
  Matching m;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (mate[i] != kNoVertex && vertices[i] < mate[i]) m.edges.emplace_back(vertices[i], mate[i]);
  m.normalize();
  return m;
}

std::optional<std::string> check_matching(const Graph& g, const Matching& m, const VertexSetView* view) {
  if (g.directed()) return "matchings are defined on undirected graphs";
  std::vector<char> used(g.num_vertices(), 0);
  for (auto [u, v] : m.edges) {
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices())
      return "matched vertex out of range";
    if (!g.find_edge(u, v)) return "pair " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge";
    if (view && (!view->contains(u) || !view->contains(v)))
      return "edge " + std::to_string(u) + "-" + std::to_string(v) + " leaves the view";
    if (used[u] || used[v]) return "vertex shared by two matched edges";
    used[u] = used[v] = 1;
  }
  return std::nullopt;
}

namespace {

// Edmonds' search from a single exposed root with blossoms kept in a
// union-find structure. Arrays are indexed by global vertex id; index n is
// the null sentinel so that the walk to the root needs no special case.
class BlossomSearch {
 public:
  explicit BlossomSearch(Vertex n)
      : nil_(n), mate_(n + 1, n), type_(n + 1, 0), pre_(n + 1, n), fa_(n + 1), vis_(n + 1, 0) {
    for (Vertex v = 0; v <= n; ++v) fa_[v] = v;
  }

  Vertex& mate(Vertex v) { return mate_[v]; }
  Vertex nil() const { return nil_; }

  template <class Neighbours>
  bool augment_from(Vertex root, std::span<const Vertex> members, Neighbours&& neighbours) {
    for (Vertex v : members) {
      type_[v] = 0;
      fa_[v] = v;
      pre_[v] = nil_;
    }
    queue_.clear();
    type_[root] = 1;
    queue_.push_back(root);
    while (!queue_.empty()) {
      Vertex x = queue_.front();
      queue_.pop_front();
      for (const EdgeRef& e : neighbours(x)) {
        Vertex y = e.other;
        if (find(x) == find(y) || type_[y] == 2) continue;
        if (type_[y] == 0) {
          type_[y] = 2;
          pre_[y] = x;
          if (mate_[y] == nil_) {
            for (Vertex u = y, last; u != nil_; u = last) {
              last = mate_[pre_[u]];
              mate_[u] = pre_[u];
              mate_[pre_[u]] = u;
            }
            return true;
          }
          type_[mate_[y]] = 1;
          queue_.push_back(mate_[y]);
        } else {
          Vertex l = lca(x, y);
          shrink(x, y, l);
          shrink(y, x, l);
        }
      }
    }
    return false;
  }

 private:
  Vertex find(Vertex x) {
    while (fa_[x] != x) {
      fa_[x] = fa_[fa_[x]];
      x = fa_[x];
    }
    return x;
  }

  Vertex lca(Vertex x, Vertex y) {
    ++stamp_;
    x = find(x);
    y = find(y);
    while (vis_[x] != stamp_) {
      vis_[x] = stamp_;
      x = find(pre_[mate_[x]]);
      if (y != nil_) std::swap(x, y);
    }
    return x;
  }

  void shrink(Vertex x, Vertex y, Vertex l) {
    while (find(x) != l) {
      pre_[x] = y;
      y = mate_[x];
      if (type_[y] == 2) {
        type_[y] = 1;
        queue_.push_back(y);
      }
      if (find(x) == x) fa_[x] = l;
      if (find(y) == y) fa_[y] = l;
      x = pre_[y];
    }
  }

  Vertex nil_;
  std::vector<Vertex> mate_, type_, pre_, fa_;
  std::vector<std::uint64_t> vis_;
  std::uint64_t stamp_ = 0;
  std::deque<Vertex> queue_;
};

}  // namespace

std::optional<Matching> augment_matching(const ForestAdjacency& adj, const VertexSetView& view,
                                         const Matching& m, std::optional<Vertex> root) {
  const Graph& g = adj.graph();
  if (auto err = check_matching(g, m, &view)) throw ContractViolation("invalid matching: " + *err);
  BlossomSearch search(g.num_vertices());
  for (auto [u, v] : m.edges) {
    search.mate(u) = v;
    search.mate(v) = u;
  }
  auto members = view.vertices();
  auto neighbours = [&](Vertex v) { return adj.out(v, view); };

  std::vector<Vertex> roots;
  if (root) {
    require(view.contains(*root), "search root is outside the view");
    if (search.mate(*root) == search.nil()) roots.push_back(*root);
  } else {
    for (Vertex v : members)
      if (search.mate(v) == search.nil()) roots.push_back(v);
    std::sort(roots.begin(), roots.end());
  }
  for (Vertex r : roots) {
    if (!search.augment_from(r, members, neighbours)) continue;
    std::vector<Vertex> mate(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      Vertex p = search.mate(members[i]);
      mate[i] = p == search.nil() ? kNoVertex : p;
    }
    return Matching::from_slice(members, mate);
  }
  return std::nullopt;
}

MatchingRun max_matching_td(const ForestAdjacency& adj,
                            const std::function<void(const VertexSetView&, const Matching&)>& observer) {
  const Graph& g = adj.graph();
  require(!g.directed(), "maximum matching needs an undirected graph");
  BlossomSearch search(g.num_vertices());
  using Slice = std::vector<Vertex>;  // partner per view position

  ProblemInstance<Slice> p;
  p.base = [] { return Slice{}; };
  p.increment = [&](Context& ctx, const VertexSetView&, Slice below, Vertex x) {
    const VertexSetView whole = ctx.forest().subtree(x);
    auto members = ctx.members(whole);
    search.mate(x) = search.nil();
    for (std::size_t i = 0; i < below.size(); ++i)
      search.mate(members[i + 1]) = below[i] == kNoVertex ? search.nil() : below[i];
    search.augment_from(x, members, [&](Vertex v) { return ctx.out(v, whole); });
    Slice out(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      Vertex m = search.mate(members[i]);
      out[i] = m == search.nil() ? kNoVertex : m;
    }
    return out;
  };
  p.unite = [](Context&, std::vector<std::pair<VertexSetView, Slice>> parts) {
    if (parts.size() == 1) return std::move(parts.front().second);
    Slice out;
    for (auto& part : parts) out.insert(out.end(), part.second.begin(), part.second.end());
    return out;
  };
  if (observer)
    p.after_increment = [&](Context&, const VertexSetView& whole, const Slice& s, Vertex) {
      observer(whole, Matching::from_slice(whole.vertices(), s));
    };

  auto result = compute(adj, p);
  return {Matching::from_slice(adj.forest().preorder(), result.value), result.ledger};
}

Matching max_matching_td(const Graph& g, const EliminationForest& forest) {
  ForestAdjacency adj(g, forest);
  return max_matching_td(adj).matching;
}

}  // namespace tdsolve
