#include "tdsolve/weighted_matching.hpp"

#include <algorithm>
#include <limits>

#include "tdsolve/framework.hpp"

namespace tdsolve {

std::vector<std::vector<Vertex>> MatchingDuals::omega_sets() const {
  std::vector<std::vector<Vertex>> sets(blossoms.size());
  for (std::size_t b = 0; b < blossoms.size(); ++b) {
    for (const BlossomChild& c : blossoms[b].children) {
      if (!c.is_blossom) {
        sets[b].push_back(c.id);
      } else {
        require(c.id >= 0 && static_cast<std::size_t>(c.id) < b, "nested blossom must precede its parent");
        sets[b].insert(sets[b].end(), sets[c.id].begin(), sets[c.id].end());
      }
    }
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  return sets;
}

std::optional<DualViolation> check_duals(const Graph& g, const VertexSetView& view, const Matching& m,
                                         const MatchingDuals& d) {
  require(!g.directed(), "matching duals are defined on undirected graphs");
  if (auto err = check_matching(g, m, &view)) throw ContractViolation("invalid matching: " + *err);
  const Vertex n = g.num_vertices();
  const auto nb = static_cast<std::int32_t>(d.blossoms.size());
  auto bad = [](int c, std::string w) { return DualViolation{c, std::move(w)}; };
  if (static_cast<Vertex>(d.y2.size()) != n) return bad(0, "vertex duals have the wrong size");

  std::vector<std::int32_t> parent(nb, -1), vparent(n, -1);
  for (std::int32_t b = 0; b < nb; ++b) {
    const DualBlossom& bl = d.blossoms[b];
    if (bl.children.empty()) return bad(0, "blossom " + std::to_string(b) + " is empty");
    if (bl.z2 < 0) return bad(0, "blossom " + std::to_string(b) + " has negative z");
    for (const BlossomChild& c : bl.children) {
      if (c.is_blossom) {
        if (c.id < 0 || c.id >= nb || c.id == b || parent[c.id] != -1)
          return bad(0, "blossom " + std::to_string(b) + " breaks laminarity");
        parent[c.id] = b;
      } else {
        if (c.id < 0 || c.id >= n || !view.contains(c.id))
          return bad(0, "blossom " + std::to_string(b) + " has a member outside the view");
        if (vparent[c.id] != -1) return bad(0, "vertex " + std::to_string(c.id) + " lies in two sibling sets");
        vparent[c.id] = b;
      }
    }
  }
  std::vector<std::int32_t> depth(nb, -1);
  for (std::int32_t b = 0; b < nb; ++b) {
    std::int32_t steps = 0;
    for (std::int32_t a = b; a != -1; a = parent[a])
      if (++steps > nb) return bad(0, "blossom nesting has a cycle");
    depth[b] = steps - 1;
  }

  // Sizes and cumulative z from the top of each chain.
  std::vector<std::int32_t> order(nb);
  for (std::int32_t b = 0; b < nb; ++b) order[b] = b;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return depth[a] < depth[b]; });
  std::vector<Weight> cum(nb, 0);
  for (auto b : order) cum[b] = parent[b] == -1 ? d.blossoms[b].z2 : checked_add(cum[parent[b]], d.blossoms[b].z2);
  std::vector<std::int64_t> size(nb, 0);
  for (Vertex v = 0; v < n; ++v)
    for (auto b = vparent[v]; b != -1; b = parent[b]) ++size[b];
  for (std::int32_t b = 0; b < nb; ++b)
    if (size[b] % 2 == 0) return bad(0, "blossom " + std::to_string(b) + " has even size");

  auto lowest_common = [&](Vertex u, Vertex v) {
    auto a = vparent[u], b = vparent[v];
    if (a == -1 || b == -1) return std::int32_t{-1};
    while (depth[a] > depth[b]) a = parent[a];
    while (depth[b] > depth[a]) b = parent[b];
    while (a != b) a = parent[a], b = parent[b];
    return a;
  };
  // Child of b containing v, as an index into b's children, or -1.
  auto child_index = [&](std::int32_t b, Vertex v) -> std::int32_t {
    BlossomChild node{false, v};
    auto p = vparent[v];
    while (p != -1 && p != b) {
      node = {true, p};
      p = parent[p];
    }
    if (p != b) return -1;
    const auto& kids = d.blossoms[b].children;
    return static_cast<std::int32_t>(std::find(kids.begin(), kids.end(), node) - kids.begin());
  };
  for (std::int32_t b = 0; b < nb; ++b) {
    const DualBlossom& bl = d.blossoms[b];
    if (!bl.structured()) continue;
    const auto k = static_cast<std::int32_t>(bl.children.size());
    auto where = "blossom " + std::to_string(b);
    if (static_cast<std::int32_t>(bl.links.size()) != k || k % 2 == 0) return bad(0, where + " has a malformed cycle");
    if (bl.base < 0 || bl.base >= n || child_index(b, bl.base) != 0) return bad(0, where + " has a misplaced base");
    for (std::int32_t i = 0; i < k; ++i) {
      auto [a, c] = bl.links[i];
      if (a < 0 || c < 0 || a >= n || c >= n || !g.find_edge(a, c) || child_index(b, a) != i ||
          child_index(b, c) != (i + 1) % k)
        return bad(0, where + " has a broken cycle link");
    }
  }

  auto lhs = [&](Vertex u, Vertex v) {
    auto top = lowest_common(u, v);
    return checked_add(checked_add(d.y2[u], d.y2[v]), top == -1 ? 0 : cum[top]);
  };
  auto tag = [](Vertex u, Vertex v) { return "edge " + std::to_string(u) + "-" + std::to_string(v); };
  for (const Edge& e : g.edges()) {
    if (!view.contains(e.u) || !view.contains(e.v)) continue;
    if (lhs(e.u, e.v) < checked_mul(e.w, 2)) return bad(1, tag(e.u, e.v) + " is not covered");
  }
  std::vector<std::int64_t> inside(nb, 0);
  for (auto [u, v] : m.edges) {
    auto id = g.find_edge(u, v);
    if (lhs(u, v) != checked_mul(g.edge(*id).w, 2)) return bad(2, tag(u, v) + " is matched but not tight");
    for (auto b = lowest_common(u, v); b != -1; b = parent[b]) ++inside[b];
  }
  for (std::int32_t b = 0; b < nb; ++b)
    if (inside[b] != size[b] / 2)
      return bad(3, "blossom " + std::to_string(b) + " holds " + std::to_string(inside[b]) + " matched edges");
  return std::nullopt;
}

namespace {

// Everything one search needs about a view, copied into local indices:
// vertices are 0..nv-1 in view order, blossom slots are nv..2nv-1.
struct DualState {
  std::vector<Vertex> mate;             // partner per position, kNoVertex when exposed
  std::vector<Weight> y2;               // per position
  std::vector<DualBlossom> blossoms;    // vertex ids are global
};

// Primal-dual blossom search in the style of the classical O(n^3)
// implementation, with two changes: a stage grows one alternating tree from
// a single exposed root, and reaching an exposed blossom (or vertex) through
// a tight edge augments directly. With one root, every tree vertex shares
// the root's parity of y2, so the S-S slack is always even and all duals
// stay integral in doubled units.
class DualSearch {
 public:
  DualSearch(const ForestAdjacency& adj, const VertexSetView& view, CostLedger* ledger, const DualState& in)
      : view_(view), members_(view.vertices()) {
    nv_ = static_cast<int>(members_.size());
    neighbend_.resize(nv_);
    for (int i = 0; i < nv_; ++i) {
      for (const EdgeRef& e : adj.out(members_[i], view, ledger)) {
        int j = view.offset(e.other);
        if (i > j) continue;
        int k = static_cast<int>(wt2_.size());
        wt2_.push_back(checked_mul(e.w, 2));
        endpoint_.push_back(i);
        endpoint_.push_back(j);
        neighbend_[i].push_back(2 * k + 1);
        neighbend_[j].push_back(2 * k);
      }
    }
    const int ne = static_cast<int>(wt2_.size());
    mate_.assign(nv_, -1);
    label_.assign(2 * nv_, 0);
    labelend_.assign(2 * nv_, -1);
    inblossom_.resize(nv_);
    for (int v = 0; v < nv_; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * nv_, -1);
    blossomchilds_.assign(2 * nv_, {});
    blossomendps_.assign(2 * nv_, {});
    blossombase_.assign(2 * nv_, -1);
    for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
    bestedge_.assign(2 * nv_, -1);
    blossombestedges_.assign(2 * nv_, {});
    has_bestlist_.assign(2 * nv_, 0);
    born_.assign(2 * nv_, 0);
    dualvar_.assign(2 * nv_, 0);
    allowedge_.assign(ne, 0);

    for (int v = 0; v < nv_; ++v) {
      dualvar_[v] = in.y2[v];
      if (in.mate[v] == kNoVertex) continue;
      int p = find_endpoint(v, view.offset(in.mate[v]));
      mate_[v] = p;
    }

    const int nb = static_cast<int>(in.blossoms.size());
    require(nb <= nv_, "too many blossoms for the view");
    for (int b = 0; b < nb; ++b) {
      const DualBlossom& bl = in.blossoms[b];
      if (!bl.structured()) throw ContractViolation("blossom " + std::to_string(b) + " has no cycle structure");
      if (bl.z2 % 2 != 0) throw ContractViolation("blossom " + std::to_string(b) + " has an odd doubled dual");
      int slot = nv_ + b;
      for (const BlossomChild& c : bl.children) {
        int child = c.is_blossom ? nv_ + c.id : view.offset(c.id);
        blossomchilds_[slot].push_back(child);
        blossomparent_[child] = slot;
      }
      for (auto [a, c] : bl.links) {
        int la = view.offset(a), lc = view.offset(c);
        int p = find_endpoint(la, lc);  // endpoint_[p] == lc
        blossomendps_[slot].push_back(p ^ 1);
      }
      blossombase_[slot] = view.offset(bl.base);
      dualvar_[slot] = bl.z2 / 2;
      born_[slot] = next_born_++;
    }
    for (int b = nv_; b < nv_ + nb; ++b)
      if (blossomparent_[b] == -1)
        for (int v : leaves(b)) inblossom_[v] = b;
    for (int b = 2 * nv_ - 1; b >= nv_ + nb; --b) unused_.push_back(b);
  }

  // One stage from `root`, which must be exposed. Returns true on augmentation.
  bool stage(int root) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = nv_; b < 2 * nv_; ++b) {
      has_bestlist_[b] = 0;
      blossombestedges_[b].clear();
    }
    std::fill(allowedge_.begin(), allowedge_.end(), 0);
    queue_.clear();
    if (mate_[root] != -1) throw ContractViolation("search root is matched");
    if (blossombase_[inblossom_[root]] != root) throw ContractViolation("exposed vertex is not its blossom's base");
    assign_label(root, 1, -1);

    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          int k = p / 2;
          int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          Weight kslack = 0;
          if (!allowedge_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allowedge_[k] = 1;
          }
          if (allowedge_[k]) {
            int bw = inblossom_[w];
            if (label_[bw] == 0) {
              if (mate_[blossombase_[bw]] == -1) {
                augment_to_exposed(v, w, p);
                augmented = true;
                break;
              }
              assign_label(w, 2, p ^ 1);
            } else if (label_[bw] == 1) {
              int base = scan_blossom(v, w);
              if (base < 0) throw std::logic_error("single-tree search met a second tree");
              add_blossom(base, k);
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      int deltatype = -1, deltaedge = -1, deltablossom = -1;
      Weight delta = 0;
      for (int v = 0; v < nv_; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          Weight d = slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) delta = d, deltatype = 2, deltaedge = bestedge_[v];
        }
      }
      for (int b = 0; b < 2 * nv_; ++b) {
        if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          Weight s = slack(bestedge_[b]);
          if (s % 2 != 0) throw std::logic_error("odd slack between two outer vertices");
          Weight d = s / 2;
          if (deltatype == -1 || d < delta) delta = d, deltatype = 3, deltaedge = bestedge_[b];
        }
      }
      for (int b = nv_; b < 2 * nv_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
            (deltatype == -1 || dualvar_[b] < delta))
          delta = dualvar_[b], deltatype = 4, deltablossom = b;
      }
      if (deltatype == -1) break;  // Hungarian tree: the root cannot be matched

      for (int v = 0; v < nv_; ++v) {
        int l = label_[inblossom_[v]];
        if (l == 1) dualvar_[v] = checked_sub(dualvar_[v], delta);
        else if (l == 2) dualvar_[v] = checked_add(dualvar_[v], delta);
      }
      for (int b = nv_; b < 2 * nv_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
          if (label_[b] == 1) dualvar_[b] = checked_add(dualvar_[b], delta);
          else if (label_[b] == 2) dualvar_[b] -= delta;
          if (dualvar_[b] < 0) throw std::logic_error("blossom dual became negative");
        }
      }
      if (deltatype == 2) {
        allowedge_[deltaedge] = 1;
        int i = endpoint_[2 * deltaedge], j = endpoint_[2 * deltaedge + 1];
        if (label_[inblossom_[i]] == 0) std::swap(i, j);
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowedge_[deltaedge] = 1;
        queue_.push_back(endpoint_[2 * deltaedge]);
      } else {
        expand_blossom(deltablossom, false);
      }
    }
    if (augmented) {
      for (int b = nv_; b < 2 * nv_; ++b)
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
          expand_blossom(b, true);
    }
    return augmented;
  }

  bool exposed(int v) const { return mate_[v] == -1; }

  DualState export_state() const {
    DualState out;
    out.mate.resize(nv_);
    out.y2.resize(nv_);
    for (int v = 0; v < nv_; ++v) {
      out.mate[v] = mate_[v] == -1 ? kNoVertex : members_[endpoint_[mate_[v]]];
      out.y2[v] = dualvar_[v];
    }
    std::vector<int> live;
    for (int b = nv_; b < 2 * nv_; ++b)
      if (blossombase_[b] >= 0) live.push_back(b);
    std::sort(live.begin(), live.end(), [&](int a, int b) { return born_[a] < born_[b]; });
    std::vector<int> index(2 * nv_, -1);
    for (std::size_t i = 0; i < live.size(); ++i) index[live[i]] = static_cast<int>(i);
    for (int b : live) {
      DualBlossom bl;
      for (int c : blossomchilds_[b])
        bl.children.push_back(c < nv_ ? BlossomChild{false, members_[c]} : BlossomChild{true, index[c]});
      for (int p : blossomendps_[b]) bl.links.emplace_back(members_[endpoint_[p]], members_[endpoint_[p ^ 1]]);
      bl.base = members_[blossombase_[b]];
      bl.z2 = checked_mul(dualvar_[b], 2);
      out.blossoms.push_back(std::move(bl));
    }
    return out;
  }

 private:
  // Endpoint id p of the edge between local a and local b with endpoint_[p] == b.
  int find_endpoint(int a, int b) const {
    for (int p : neighbend_[a])
      if (endpoint_[p] == b) return p;
    throw ContractViolation("matched pair is not an edge of the view");
  }

  Weight slack(int k) const {
    return checked_sub(checked_add(dualvar_[endpoint_[2 * k]], dualvar_[endpoint_[2 * k + 1]]), wt2_[k]);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out, stack{b};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      if (t < nv_) {
        out.push_back(t);
      } else {
        const auto& kids = blossomchilds_[t];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
      }
    }
    return out;
  }

  static int wrap(int j, int len) { return ((j % len) + len) % len; }

  void assign_label(int w, int t, int p) {
    while (true) {
      int b = inblossom_[w];
      label_[w] = label_[b] = t;
      labelend_[w] = labelend_[b] = p;
      bestedge_[w] = bestedge_[b] = -1;
      if (t == 1) {
        for (int v : leaves(b)) queue_.push_back(v);
        return;
      }
      int base = blossombase_[b];
      if (mate_[base] < 0) throw std::logic_error("inner blossom has an exposed base");
      w = endpoint_[mate_[base]];
      p = mate_[base] ^ 1;
      t = 1;
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = endpoint_[2 * k], w = endpoint_[2 * k + 1];
    int bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
    require(!unused_.empty(), "blossom slots exhausted");
    int b = unused_.back();
    unused_.pop_back();
    born_[b] = next_born_++;
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int u : leaves(b)) {
      if (label_[inblossom_[u]] == 2) queue_.push_back(u);
      inblossom_[u] = b;
    }
    std::vector<int> bestedgeto(2 * nv_, -1);
    for (int sub : path) {
      std::vector<int> ks;
      if (!has_bestlist_[sub]) {
        for (int u : leaves(sub))
          for (int p : neighbend_[u]) ks.push_back(p / 2);
      } else {
        ks = blossombestedges_[sub];
      }
      for (int e : ks) {
        int i = endpoint_[2 * e], j = endpoint_[2 * e + 1];
        if (inblossom_[j] == b) std::swap(i, j);
        int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(e) < slack(bestedgeto[bj])))
          bestedgeto[bj] = e;
      }
      blossombestedges_[sub].clear();
      has_bestlist_[sub] = 0;
      bestedge_[sub] = -1;
    }
    blossombestedges_[b].clear();
    for (int e : bestedgeto)
      if (e != -1) blossombestedges_[b].push_back(e);
    has_bestlist_[b] = 1;
    bestedge_[b] = -1;
    for (int e : blossombestedges_[b])
      if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) bestedge_[b] = e;
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int v : leaves(s)) inblossom_[v] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const auto& kids = blossomchilds_[b];
      const auto& endps = blossomendps_[b];
      const int len = static_cast<int>(kids.size());
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(kids.begin(), kids.end(), entrychild) - kids.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[endps[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[endps[wrap(j - endptrick, len)] / 2] = 1;
        j += jstep;
        p = endps[wrap(j - endptrick, len)] ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = kids[wrap(j, len)];
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (kids[wrap(j, len)] != entrychild) {
        bv = kids[wrap(j, len)];
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int reached = -1;
        for (int v : leaves(bv))
          if (label_[v] != 0) {
            reached = v;
            break;
          }
        if (reached != -1) {
          label_[reached] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(reached, 2, labelend_[reached]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestlist_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  // Rematches the inside of blossom b so that v becomes its base.
  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) augment_blossom(t, v);
    auto& kids = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    const int len = static_cast<int>(kids.size());
    int i = static_cast<int>(std::find(kids.begin(), kids.end(), t) - kids.begin());
    int j = i, jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = kids[wrap(j, len)];
      int p = endps[wrap(j - endptrick, len)] ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = kids[wrap(j, len)];
      if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(kids.begin(), kids.begin() + i, kids.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[b] = blossombase_[kids[0]];
  }

  // Flips the alternating path from outer vertex s (whose new partner is
  // endpoint p) back to the root.
  void augment_path(int s, int p) {
    while (true) {
      int bs = inblossom_[s];
      if (bs >= nv_) augment_blossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) return;
      int t = endpoint_[labelend_[bs]];
      int bt = inblossom_[t];
      s = endpoint_[labelend_[bt]];
      int j = endpoint_[labelend_[bt] ^ 1];
      if (bt >= nv_) augment_blossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }

  // Tight edge from outer v to w, where w's top blossom is unlabelled with
  // an exposed base.
  void augment_to_exposed(int v, int w, int p) {
    int bw = inblossom_[w];
    if (bw >= nv_) augment_blossom(bw, w);
    mate_[w] = p ^ 1;
    augment_path(v, p);
  }

  VertexSetView view_;
  std::span<const Vertex> members_;
  int nv_ = 0;
  std::vector<Weight> wt2_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_;
  std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
  std::vector<char> has_bestlist_, allowedge_;
  std::vector<std::int64_t> born_;
  std::int64_t next_born_ = 0;
  std::vector<Weight> dualvar_;
  std::vector<int> unused_, queue_;
};

DualState state_from(const VertexSetView& view, const Matching& m, const MatchingDuals& d, Vertex n) {
  DualState s;
  auto mates = m.mates(n);
  for (Vertex v : view.vertices()) {
    s.mate.push_back(mates[v]);
    s.y2.push_back(d.y2[v]);
  }
  s.blossoms = d.blossoms;
  return s;
}

}  // namespace

WeightedAugmentResult weighted_augment(const ForestAdjacency& adj, const VertexSetView& view, const Matching& m,
                                       const MatchingDuals& d, std::optional<Vertex> root) {
  const Graph& g = adj.graph();
  if (auto bad = check_duals(g, view, m, d))
    throw ContractViolation("duals violate condition " + std::to_string(bad->condition) + ": " + bad->witness);
  DualSearch search(adj, view, nullptr, state_from(view, m, d, g.num_vertices()));
  auto members = view.vertices();
  std::vector<int> roots;
  if (root) {
    require(view.contains(*root), "search root is outside the view");
    roots.push_back(view.offset(*root));
  } else {
    std::vector<Vertex> ids;
    for (Vertex v : members) ids.push_back(v);
    std::sort(ids.begin(), ids.end());
    for (Vertex v : ids) roots.push_back(view.offset(v));
  }
  bool augmented = false;
  for (int r : roots) {
    if (!search.exposed(r)) continue;
    if (search.stage(r)) {
      augmented = true;
      break;
    }
  }
  DualState s = search.export_state();
  WeightedAugmentResult out{augmented, Matching::from_slice(members, s.mate), d};
  for (std::size_t i = 0; i < members.size(); ++i) out.duals.y2[members[i]] = s.y2[i];
  out.duals.blossoms = std::move(s.blossoms);
  return out;
}

namespace {

MatchingDuals global_duals(std::span<const Vertex> members, const DualState& s, Vertex n) {
  MatchingDuals d;
  d.y2.assign(n, 0);
  for (std::size_t i = 0; i < members.size(); ++i) d.y2[members[i]] = s.y2[i];
  d.blossoms = s.blossoms;
  return d;
}

}  // namespace

PerfectMatchingResult mwpm_td(const ForestAdjacency& adj, const WeightedObserver& observer) {
  const Graph& g = adj.graph();
  require(!g.directed(), "perfect matching needs an undirected graph");

  ProblemInstance<DualState> p;
  p.base = [] { return DualState{}; };
  p.increment = [](Context& ctx, const VertexSetView&, DualState below, Vertex x) {
    const VertexSetView whole = ctx.forest().subtree(x);
    ctx.members(whole);
    // Smallest y(x) that covers every edge from x; no blossom contains x yet.
    Weight yx = 0;
    for (const EdgeRef& e : ctx.out(x, whole))
      yx = std::max(yx, checked_sub(checked_mul(e.w, 2), below.y2[whole.offset(e.other) - 1]));
    below.mate.insert(below.mate.begin(), kNoVertex);
    below.y2.insert(below.y2.begin(), yx);
    DualSearch search(ctx.adjacency(), whole, &ctx.ledger(), below);
    search.stage(0);
    return search.export_state();
  };
  p.unite = [](Context&, std::vector<std::pair<VertexSetView, DualState>> parts) {
    if (parts.size() == 1) return std::move(parts.front().second);
    DualState out;
    for (auto& [view, s] : parts) {
      auto shift = static_cast<std::int32_t>(out.blossoms.size());
      out.mate.insert(out.mate.end(), s.mate.begin(), s.mate.end());
      out.y2.insert(out.y2.end(), s.y2.begin(), s.y2.end());
      for (auto& bl : s.blossoms) {
        for (auto& c : bl.children)
          if (c.is_blossom) c.id += shift;
        out.blossoms.push_back(std::move(bl));
      }
    }
    return out;
  };
  if (observer)
    p.after_increment = [&](Context&, const VertexSetView& whole, const DualState& s, Vertex) {
      auto members = whole.vertices();
      observer(whole, Matching::from_slice(members, s.mate), global_duals(members, s, g.num_vertices()));
    };

  auto result = compute(adj, p);
  auto order = adj.forest().preorder();
  Matching m = Matching::from_slice(order, result.value.mate);
  if (2 * static_cast<Vertex>(m.size()) != g.num_vertices()) throw ImperfectMatchingError(std::move(m));
  return {std::move(m), global_duals(order, result.value, g.num_vertices()), result.ledger};
}

PerfectMatchingResult mwpm_td(const Graph& g, const EliminationForest& forest) {
  ForestAdjacency adj(g, forest);
  return mwpm_td(adj);
}

}  // namespace tdsolve
