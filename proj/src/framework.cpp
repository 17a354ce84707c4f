#include "tdsolve/framework.hpp"

namespace tdsolve {

ProblemInstance<std::int64_t> edge_count_problem() {
  ProblemInstance<std::int64_t> p;
  p.base = [] { return std::int64_t{0}; };
  p.increment = [](Context& ctx, const VertexSetView& below, std::int64_t count, Vertex x) {
    const VertexSetView whole(ctx.forest(), below.lo() - 1, below.hi());
    count += static_cast<std::int64_t>(ctx.out(x, whole).size());
    if (ctx.graph().directed()) count += static_cast<std::int64_t>(ctx.in(x, whole).size());
    return count;
  };
  p.unite = [](Context&, std::vector<std::pair<VertexSetView, std::int64_t>> parts) {
    std::int64_t total = 0;
    for (auto& part : parts) total += part.second;
    return total;
  };
  return p;
}

}  // namespace tdsolve
