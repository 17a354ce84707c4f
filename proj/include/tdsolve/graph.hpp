#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tdsolve/error.hpp"

namespace tdsolve {

struct Edge {
  Vertex u;
  Vertex v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple weighted graph, directed or undirected, immutable after construction.
///
/// Vertices are dense ids in [0, n). For undirected graphs an edge is stored
/// once and appears in the incidence list of both endpoints; out_edges() and
/// in_edges() then return the same list.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on self-loops, duplicate pairs or out-of-range endpoints.
  Graph(Vertex n, bool directed, std::vector<Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool directed() const { return directed_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  std::span<const std::int32_t> out_edges(Vertex v) const { return out_[v]; }
  std::span<const std::int32_t> in_edges(Vertex v) const { return directed_ ? in_[v] : out_[v]; }

  /// The endpoint of edge `id` that is not `v`.
  Vertex other(std::size_t id, Vertex v) const {
    const Edge& e = edges_[id];
    return e.u == v ? e.v : e.u;
  }

  /// Edge id of u→v (or {u,v} when undirected).
  std::optional<std::int32_t> find_edge(Vertex u, Vertex v) const;

  bool has_negative_weight() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  Vertex n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::int32_t>> out_;
  std::vector<std::vector<std::int32_t>> in_;
  std::unordered_map<std::uint64_t, std::int32_t> index_;
};

}  // namespace tdsolve
