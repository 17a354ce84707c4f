#include <algorithm>
#include <set>

#include "tdsolve/forest.hpp"

namespace tdsolve {

std::int32_t TreeDecomposition::width() const {
  std::size_t widest = 0;
  for (const auto& b : bags) widest = std::max(widest, b.size());
  return static_cast<std::int32_t>(widest) - 1;
}

std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const Vertex n = g.num_vertices();
  const auto nbags = static_cast<std::int32_t>(td.bags.size());
  if (nbags == 0) {
    if (g.num_edges() > 0) return "no bags but the graph has edges";
    return std::nullopt;
  }
  if (static_cast<std::int32_t>(td.tree.size()) != nbags - 1)
    return "bag tree must have exactly #bags-1 edges";

  std::vector<std::vector<std::int32_t>> tree_adj(nbags);
  for (auto [a, b] : td.tree) {
    if (a < 0 || a >= nbags || b < 0 || b >= nbags || a == b) return "bag tree edge out of range";
    tree_adj[a].push_back(b);
    tree_adj[b].push_back(a);
  }
  std::vector<char> seen(nbags, 0);
  std::vector<std::int32_t> stack{0};
  seen[0] = 1;
  std::int32_t reached = 1;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (auto b : tree_adj[a])
      if (!seen[b]) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
  }
  if (reached != nbags) return "bag tree is not connected";

  std::vector<std::vector<std::int32_t>> bags_of(n);
  for (std::int32_t i = 0; i < nbags; ++i) {
    for (Vertex v : td.bags[i]) {
      if (v < 0 || v >= n) return "bag " + std::to_string(i) + " contains an out-of-range vertex";
      if (!bags_of[v].empty() && bags_of[v].back() == i)
        return "bag " + std::to_string(i) + " lists a vertex twice";
      bags_of[v].push_back(i);
    }
  }
  for (auto& l : bags_of) std::sort(l.begin(), l.end());

  for (std::size_t id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const auto& a = bags_of[e.u];
    const auto& b = bags_of[e.v];
    std::vector<std::int32_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty())
      return "edge condition: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
             " is in no bag";
  }

  // A subgraph of a tree is connected iff it has one edge fewer than vertices.
  std::vector<std::int32_t> inner(n, 0);
  for (auto [a, b] : td.tree) {
    const auto& x = td.bags[a];
    const auto& y = td.bags[b];
    for (Vertex v : x)
      if (std::find(y.begin(), y.end(), v) != y.end()) ++inner[v];
  }
  for (Vertex v = 0; v < n; ++v)
    if (!bags_of[v].empty() && inner[v] != static_cast<std::int32_t>(bags_of[v].size()) - 1)
      return "connectivity condition: bags containing vertex " + std::to_string(v) +
             " are not connected";
  return std::nullopt;
}

namespace {

// Contract bags that are subsets of a neighbouring bag, so that the number of
// remaining bags is at most n.
std::vector<std::set<std::int32_t>> compress(const TreeDecomposition& td, Vertex n,
                                             std::vector<char>& alive) {
  const auto nbags = static_cast<std::int32_t>(td.bags.size());
  std::vector<std::set<std::int32_t>> adj(nbags);
  for (auto [a, b] : td.tree) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  alive.assign(nbags, 1);
  std::vector<std::int32_t> mark(n, -1);
  auto subset = [&](std::int32_t i, std::int32_t j) {
    for (Vertex v : td.bags[j]) mark[v] = j;
    bool ok = std::all_of(td.bags[i].begin(), td.bags[i].end(), [&](Vertex v) { return mark[v] == j; });
    for (Vertex v : td.bags[j]) mark[v] = -1;
    return ok;
  };
  std::vector<std::int32_t> work(nbags);
  for (std::int32_t i = 0; i < nbags; ++i) work[i] = nbags - 1 - i;
  while (!work.empty()) {
    auto i = work.back();
    work.pop_back();
    if (!alive[i]) continue;
    for (auto j : adj[i]) {
      if (!subset(i, j)) continue;
      for (auto k : adj[i]) {
        if (k == j) continue;
        adj[k].erase(i);
        adj[k].insert(j);
        adj[j].insert(k);
      }
      adj[j].erase(i);
      adj[i].clear();
      alive[i] = 0;
      work.push_back(j);
      break;
    }
  }
  return adj;
}

}  // namespace

EliminationForest forest_from_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (auto err = validate_decomposition(g, td)) throw InputError("invalid tree decomposition: " + *err);
  const Vertex n = g.num_vertices();
  const auto nbags = static_cast<std::int32_t>(td.bags.size());
  std::vector<std::optional<Vertex>> parent(n);
  if (nbags == 0) return EliminationForest(std::move(parent));

  std::vector<char> alive;
  auto adj = compress(td, n, alive);

  std::vector<char> placed(n, 0), done(nbags, 0);
  std::vector<std::int32_t> sub(nbags, 0), up(nbags, -1);

  struct Task {
    std::int32_t start;
    std::optional<Vertex> attach;
  };
  std::vector<Task> tasks;
  for (std::int32_t i = nbags - 1; i >= 0; --i)
    if (alive[i]) {
      tasks.push_back({i, std::nullopt});
      break;  // the compressed bag tree is still connected
    }

  std::vector<std::int32_t> order;
  while (!tasks.empty()) {
    Task task = tasks.back();
    tasks.pop_back();

    // Collect the component and its rooted subtree sizes.
    order.clear();
    order.push_back(task.start);
    up[task.start] = -1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      auto a = order[h];
      for (auto b : adj[a])
        if (!done[b] && b != up[a]) {
          up[b] = a;
          order.push_back(b);
        }
    }
    const auto total = static_cast<std::int32_t>(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      sub[*it] = 1;
      for (auto b : adj[*it])
        if (!done[b] && b != up[*it]) sub[*it] += sub[b];
    }
    std::int32_t centroid = -1;
    for (auto a : order) {
      std::int32_t largest = total - sub[a];
      for (auto b : adj[a])
        if (!done[b] && b != up[a]) largest = std::max(largest, sub[b]);
      if (2 * largest <= total && (centroid < 0 || a < centroid)) centroid = a;
    }

    done[centroid] = 1;
    std::optional<Vertex> attach = task.attach;
    std::vector<Vertex> fresh;
    for (Vertex v : td.bags[centroid])
      if (!placed[v]) fresh.push_back(v);
    std::sort(fresh.begin(), fresh.end());
    for (Vertex v : fresh) {
      placed[v] = 1;
      parent[v] = attach;
      attach = v;
    }
    std::vector<std::int32_t> next;
    for (auto b : adj[centroid])
      if (!done[b]) next.push_back(b);
    for (auto it = next.rbegin(); it != next.rend(); ++it) tasks.push_back({*it, attach});
  }
  return EliminationForest(std::move(parent));
}

}  // namespace tdsolve
