#pragma once

#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "tdsolve/adjacency.hpp"

namespace tdsolve::detail {

// Dijkstra confined to a view, with per-position state. Ties in the heap
// go to the smaller vertex id. The caller supplies the edge lists and a
// step function giving each scanned edge's nonnegative cost (nothing to
// skip it); the step also sees which vertices are already settled.
class ViewDijkstra {
 public:
  explicit ViewDijkstra(const VertexSetView& view)
      : view_(view),
        dist_(view.size(), kInfinity),
        parent_(view.size(), kNoVertex),
        parent_edge_(view.size(), -1),
        done_(view.size(), 0) {}

  template <class Neighbours, class Step>
  void run(Vertex source, Neighbours&& neighbours, Step&& step) {
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist_[pos(source)] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      const auto iu = pos(u);
      if (done_[iu] || d != dist_[iu]) continue;
      done_[iu] = 1;
      order_.push_back(u);
      for (const EdgeRef& e : neighbours(u)) {
        std::optional<Weight> cost = step(u, e);
        if (!cost) continue;
        if (*cost < 0) throw std::logic_error("negative edge cost inside Dijkstra");
        const Weight nd = checked_add(d, *cost);
        const auto iv = pos(e.other);
        if (nd < dist_[iv]) {
          dist_[iv] = nd;
          parent_[iv] = u;
          parent_edge_[iv] = e.id;
          heap.push({nd, e.other});
        }
      }
    }
  }

  bool reached(Vertex v) const { return dist_[pos(v)] != kInfinity; }
  bool settled(Vertex v) const { return done_[pos(v)] != 0; }
  Weight dist(Vertex v) const { return dist_[pos(v)]; }
  Vertex parent(Vertex v) const { return parent_[pos(v)]; }
  std::int32_t parent_edge(Vertex v) const { return parent_edge_[pos(v)]; }
  /// Vertices in the order they were settled.
  const std::vector<Vertex>& order() const { return order_; }

  /// Tree path from the source to v, source first.
  std::vector<Vertex> path_to(Vertex v) const {
    std::vector<Vertex> path;
    for (Vertex u = v; u != kNoVertex; u = parent(u)) path.push_back(u);
    return {path.rbegin(), path.rend()};
  }

 private:
  std::int32_t pos(Vertex v) const { return view_.offset(v); }

  VertexSetView view_;
  std::vector<Weight> dist_;
  std::vector<Vertex> parent_;
  std::vector<std::int32_t> parent_edge_;
  std::vector<char> done_;
  std::vector<Vertex> order_;
};

}  // namespace tdsolve::detail
