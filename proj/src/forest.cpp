#include "tdsolve/forest.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tdsolve {

EliminationForest::EliminationForest(std::vector<std::optional<Vertex>> parent)
    : parent_(std::move(parent)) {
  const Vertex n = size();
  children_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!parent_[v]) {
      roots_.push_back(v);
      continue;
    }
    Vertex p = *parent_[v];
    if (p < 0 || p >= n)
      throw InputError("parent of vertex " + std::to_string(v) + " is out of range");
    if (p == v) throw InputError("vertex " + std::to_string(v) + " is its own parent");
    children_[p].push_back(v);
  }
  // children are built in ascending id order already

  tin_.assign(n, -1);
  tout_.assign(n, -1);
  level_.assign(n, 0);
  preorder_.reserve(n);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex r : roots_) {
    tin_[r] = static_cast<std::int32_t>(preorder_.size());
    preorder_.push_back(r);
    level_[r] = 1;
    stack.emplace_back(r, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < children_[v].size()) {
        Vertex c = children_[v][next++];
        tin_[c] = static_cast<std::int32_t>(preorder_.size());
        preorder_.push_back(c);
        level_[c] = level_[v] + 1;
        stack.emplace_back(c, 0);
      } else {
        tout_[v] = static_cast<std::int32_t>(preorder_.size());
        depth_ = std::max(depth_, level_[v]);
        stack.pop_back();
      }
    }
  }
  if (static_cast<Vertex>(preorder_.size()) != n) {
    for (Vertex v = 0; v < n; ++v)
      if (tin_[v] < 0)
        throw InputError("parent links contain a cycle through vertex " + std::to_string(v));
  }
}

std::optional<std::int32_t> validate_forest(const Graph& g, const EliminationForest& f) {
  require(g.num_vertices() == f.size(), "forest and graph have different vertex counts");
  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (!f.is_ancestor(e.u, e.v) && !f.is_ancestor(e.v, e.u)) return static_cast<std::int32_t>(id);
  }
  return std::nullopt;
}

std::int32_t forest_depth(const EliminationForest& f) { return f.depth(); }

namespace {

std::vector<std::vector<Vertex>> undirected_neighbours(const Graph& g) {
  std::vector<std::vector<Vertex>> nb(g.num_vertices());
  for (const Edge& e : g.edges()) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  for (auto& l : nb) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return nb;
}

}  // namespace

EliminationForest dfs_fallback_forest(const Graph& g) {
  const Vertex n = g.num_vertices();
  auto nb = undirected_neighbours(g);
  std::vector<std::optional<Vertex>> parent(n);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == nb[v].size()) {
        stack.pop_back();
        continue;
      }
      Vertex u = nb[v][next++];
      if (seen[u]) continue;
      seen[u] = 1;
      parent[u] = v;
      stack.emplace_back(u, 0);
    }
  }
  return EliminationForest(std::move(parent));
}

namespace {

class TreedepthSearch {
 public:
  explicit TreedepthSearch(const Graph& g) : n_(g.num_vertices()), adj_(n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= 1u << e.v;
      adj_[e.v] |= 1u << e.u;
    }
    memo_.assign(std::size_t{1} << n_, -1);
    choice_.assign(std::size_t{1} << n_, -1);
  }

  std::int32_t solve(std::uint32_t mask) {
    if (mask == 0) return 0;
    if (memo_[mask] >= 0) return memo_[mask];
    std::uint32_t comp = component_of(mask, std::countr_zero(mask));
    std::int32_t best;
    if (comp != mask) {
      best = std::max(solve(comp), solve(mask & ~comp));
    } else if (std::popcount(mask) == 1) {
      best = 1;
      choice_[mask] = std::countr_zero(mask);
    } else {
      best = n_ + 1;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        Vertex v = std::countr_zero(rest);
        std::int32_t d = 1 + solve(mask & ~(1u << v));
        if (d < best) {
          best = d;
          choice_[mask] = v;
        }
      }
    }
    memo_[mask] = best;
    return best;
  }

  void build(std::uint32_t mask, std::optional<Vertex> above, std::vector<std::optional<Vertex>>& parent) {
    while (mask) {
      std::uint32_t comp = component_of(mask, std::countr_zero(mask));
      mask &= ~comp;
      solve(comp);
      Vertex v = choice_[comp];
      parent[v] = above;
      build(comp & ~(1u << v), v, parent);
    }
  }

 private:
  std::uint32_t component_of(std::uint32_t mask, Vertex start) const {
    std::uint32_t comp = 1u << start, frontier = comp;
    while (frontier) {
      Vertex v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t fresh = adj_[v] & mask & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    return comp;
  }

  Vertex n_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::int32_t> memo_;
  std::vector<Vertex> choice_;
};

}  // namespace

TreedepthResult exact_treedepth(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n > kExactTreedepthLimit)
    throw RefusalError("exact tree-depth search is limited to " +
                       std::to_string(kExactTreedepthLimit) + " vertices");
  TreedepthSearch search(g);
  std::uint32_t all = n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1));
  std::int32_t depth = search.solve(all);
  std::vector<std::optional<Vertex>> parent(n);
  search.build(all, std::nullopt, parent);
  return {depth, EliminationForest(std::move(parent))};
}

}  // namespace tdsolve
