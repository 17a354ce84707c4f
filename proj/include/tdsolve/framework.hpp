#pragma once

#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdsolve/adjacency.hpp"

namespace tdsolve {

/// Shared, read-only problem data plus the run's ledger. Callbacks reach the
/// graph only through here so that every edge and vertex they look at is
/// accounted for.
class Context {
 public:
  explicit Context(const ForestAdjacency& adj) : adj_(&adj) {}

  const Graph& graph() const { return adj_->graph(); }
  const EliminationForest& forest() const { return adj_->forest(); }
  const ForestAdjacency& adjacency() const { return *adj_; }

  std::span<const EdgeRef> out(Vertex v, const VertexSetView& view) { return adj_->out(v, view, &ledger_); }
  std::span<const EdgeRef> in(Vertex v, const VertexSetView& view) { return adj_->in(v, view, &ledger_); }
  std::span<const Vertex> members(const VertexSetView& view) {
    ledger_.vertex_touches += static_cast<std::uint64_t>(view.size());
    return view.vertices();
  }

  CostLedger& ledger() { return ledger_; }
  const CostLedger& ledger() const { return ledger_; }

 private:
  const ForestAdjacency* adj_;
  CostLedger ledger_;
};

/// The value function f on vertex sets, given by its three building blocks.
///
/// increment(X, f(X), x) receives X as the view below(x) and must return
/// f(X ∪ {x}); unite receives disjoint, mutually non-adjacent views in
/// ascending order of their subtree roots and must be the identity on a
/// single part.
template <class Value>
struct ProblemInstance {
  std::function<Value()> base;
  std::function<Value(Context&, const VertexSetView&, Value, Vertex)> increment;
  std::function<Value(Context&, std::vector<std::pair<VertexSetView, Value>>)> unite;
  /// Optional observer called with subtree(x) and f(subtree(x)).
  std::function<void(Context&, const VertexSetView&, const Value&, Vertex)> after_increment;
};

template <class Value>
struct ComputeResult {
  Value value;
  CostLedger ledger;
};

/// A problem callback threw; root() is the subtree root being processed
/// (kNoVertex for the final union over all roots). The original exception is
/// nested.
class CallbackError : public std::runtime_error {
 public:
  CallbackError(Vertex root, const std::string& what)
      : std::runtime_error("callback failed at subtree root " + std::to_string(root) + ": " + what),
        root_(root) {}
  Vertex root() const { return root_; }

 private:
  Vertex root_;
};

namespace detail {

template <class F>
auto guarded(Vertex root, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const CallbackError&) {
    throw;
  } catch (const std::exception& e) {
    std::throw_with_nested(CallbackError(root, e.what()));
  }
}

}  // namespace detail

/// Evaluates f(V) bottom-up over the elimination forest.
///
/// Vertices are processed in reverse preorder, which visits every child
/// before its parent, so no native recursion is needed however deep the
/// forest is. Children are united in ascending vertex id.
template <class Value>
ComputeResult<Value> compute(const ForestAdjacency& adj, const ProblemInstance<Value>& problem) {
  Context ctx(adj);
  const EliminationForest& f = adj.forest();
  if (f.size() == 0) return {problem.base(), ctx.ledger()};

  std::vector<std::optional<Value>> slot(f.size());
  auto gather = [&](std::span<const Vertex> parts) {
    std::vector<std::pair<VertexSetView, Value>> out;
    out.reserve(parts.size());
    for (Vertex c : parts) {
      out.emplace_back(f.subtree(c), std::move(*slot[c]));
      slot[c].reset();
    }
    return out;
  };

  auto pre = f.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    const Vertex x = *it;
    auto kids = f.children(x);
    Value inner = detail::guarded(x, [&]() -> Value {
      if (kids.empty()) return problem.base();
      ++ctx.ledger().union_calls;
      return problem.unite(ctx, gather(kids));
    });
    const VertexSetView below = f.below(x);
    Value value = detail::guarded(x, [&]() -> Value {
      ++ctx.ledger().increment_calls;
      return problem.increment(ctx, below, std::move(inner), x);
    });
    if (problem.after_increment) problem.after_increment(ctx, f.subtree(x), value, x);
    slot[x] = std::move(value);
  }
  Value top = detail::guarded(kNoVertex, [&]() -> Value {
    ++ctx.ledger().union_calls;
    return problem.unite(ctx, gather(f.roots()));
  });
  return {std::move(top), ctx.ledger()};
}

/// Demonstration instance: f(S) = |E[S]|.
ProblemInstance<std::int64_t> edge_count_problem();

}  // namespace tdsolve
