#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdsolve/graph.hpp"

namespace tdsolve {

class EliminationForest;

/// A set of vertices that is one preorder interval of an elimination forest.
///
/// Every complete subtree is such an interval, and so is a subtree with its
/// root removed (the concatenation of its children's subtrees). Membership is
/// a constant-time interval test on preorder times.
class VertexSetView {
 public:
  VertexSetView(const EliminationForest& forest, std::int32_t lo, std::int32_t hi)
      : forest_(&forest), lo_(lo), hi_(hi) {}

  bool contains(Vertex v) const;
  std::int32_t lo() const { return lo_; }
  std::int32_t hi() const { return hi_; }
  std::int32_t size() const { return hi_ - lo_; }
  bool empty() const { return hi_ == lo_; }
  /// Members in preorder.
  std::span<const Vertex> vertices() const;
  /// Position of a member inside this view, in [0, size()).
  std::int32_t offset(Vertex v) const;
  const EliminationForest& forest() const { return *forest_; }

 private:
  const EliminationForest* forest_;
  std::int32_t lo_;
  std::int32_t hi_;
};

/// Rooted forest on the vertex set, with preorder numbering.
///
/// Children and roots are visited in ascending vertex id, so preorder times
/// are deterministic. Construction rejects out-of-range parents and cycles.
class EliminationForest {
 public:
  EliminationForest() = default;
  explicit EliminationForest(std::vector<std::optional<Vertex>> parent);

  Vertex size() const { return static_cast<Vertex>(parent_.size()); }
  std::optional<Vertex> parent(Vertex v) const { return parent_[v]; }
  const std::vector<std::optional<Vertex>>& parents() const { return parent_; }
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  std::span<const Vertex> roots() const { return roots_; }
  std::span<const Vertex> preorder() const { return preorder_; }

  /// Maximum number of vertices on a root-to-leaf path (0 when empty).
  std::int32_t depth() const { return depth_; }
  /// Number of vertices on the path from the root to v, inclusive.
  std::int32_t level(Vertex v) const { return level_[v]; }
  std::int32_t tin(Vertex v) const { return tin_[v]; }
  std::int32_t tout(Vertex v) const { return tout_[v]; }

  /// a is an ancestor of v or a == v.
  bool is_ancestor(Vertex a, Vertex v) const { return tin_[a] <= tin_[v] && tin_[v] < tout_[a]; }

  VertexSetView whole() const { return {*this, 0, size()}; }
  VertexSetView subtree(Vertex x) const { return {*this, tin_[x], tout_[x]}; }
  /// The subtree of x without x itself.
  VertexSetView below(Vertex x) const { return {*this, tin_[x] + 1, tout_[x]}; }

  friend bool operator==(const EliminationForest& a, const EliminationForest& b) {
    return a.parent_ == b.parent_;
  }

 private:
  std::vector<std::optional<Vertex>> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> roots_;
  std::vector<Vertex> preorder_;
  std::vector<std::int32_t> tin_, tout_, level_;
  std::int32_t depth_ = 0;
};

inline bool VertexSetView::contains(Vertex v) const {
  auto t = forest_->tin(v);
  return lo_ <= t && t < hi_;
}

inline std::span<const Vertex> VertexSetView::vertices() const {
  return forest_->preorder().subspan(lo_, hi_ - lo_);
}

inline std::int32_t VertexSetView::offset(Vertex v) const { return forest_->tin(v) - lo_; }

/// Returns the id of an edge whose endpoints are not in ancestor relation,
/// or nothing when the forest is a valid elimination forest of g.
std::optional<std::int32_t> validate_forest(const Graph& g, const EliminationForest& f);

/// Same as f.depth(); kept as a free function for symmetry with the other checks.
std::int32_t forest_depth(const EliminationForest& f);

/// Depth-first spanning forest of the underlying undirected graph, started
/// from vertices in ascending order and exploring neighbours in ascending order.
EliminationForest dfs_fallback_forest(const Graph& g);

struct TreedepthResult {
  std::int32_t depth;
  EliminationForest forest;
};

inline constexpr Vertex kExactTreedepthLimit = 12;

/// Minimum-depth elimination forest by exhaustive search over vertex subsets.
/// Throws RefusalError above kExactTreedepthLimit vertices.
TreedepthResult exact_treedepth(const Graph& g);

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<std::int32_t, std::int32_t>> tree;

  std::int32_t width() const;
};

/// Nothing when td is a tree decomposition of g; otherwise the failed condition.
std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Depth guarantee constant for forest_from_decomposition:
/// depth <= kDecompositionDepthFactor * (width + 1) * ceil(log2(n + 1)).
inline constexpr std::int32_t kDecompositionDepthFactor = 2;

/// Centroid-recursion conversion of a tree decomposition into an elimination
/// forest. Throws InputError naming the violated condition on invalid input.
EliminationForest forest_from_decomposition(const Graph& g, const TreeDecomposition& td);

}  // namespace tdsolve
