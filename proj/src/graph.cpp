#include "tdsolve/graph.hpp"

#include <algorithm>
#include <string>

namespace tdsolve {

Graph::Graph(Vertex n, bool directed, std::vector<Edge> edges)
    : n_(n), directed_(directed), edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  out_.resize(n);
  if (directed_) in_.resize(n);
  index_.reserve(edges_.size() * 2);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("edge " + std::to_string(id) + " has an endpoint out of range");
    if (e.u == e.v) throw InputError("edge " + std::to_string(id) + " is a self-loop");
    auto k = directed_ ? key(e.u, e.v) : key(std::min(e.u, e.v), std::max(e.u, e.v));
    if (!index_.emplace(k, static_cast<std::int32_t>(id)).second)
      throw InputError("edge " + std::to_string(id) + " duplicates an earlier edge");
    out_[e.u].push_back(static_cast<std::int32_t>(id));
    if (directed_)
      in_[e.v].push_back(static_cast<std::int32_t>(id));
    else
      out_[e.v].push_back(static_cast<std::int32_t>(id));
  }
}

std::optional<std::int32_t> Graph::find_edge(Vertex u, Vertex v) const {
  auto k = directed_ ? key(u, v) : key(std::min(u, v), std::max(u, v));
  auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_negative_weight() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w < 0; });
}

}  // namespace tdsolve
