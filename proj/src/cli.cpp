#include "tdsolve/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "tdsolve/io.hpp"
#include "tdsolve/matching.hpp"
#include "tdsolve/min_cycle.hpp"
#include "tdsolve/oracles.hpp"
#include "tdsolve/potentials.hpp"
#include "tdsolve/reductions.hpp"
#include "tdsolve/replacement.hpp"
#include "tdsolve/two_hop.hpp"
#include "tdsolve/weighted_matching.hpp"

namespace tdsolve::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string graph, forest, td;
  bool fallback = false;
  bool oracle = false;
  std::string format = "text";
  std::string variant = "perfect";
  std::string terminals, path, out, labels;
  std::int64_t source = 1;
  // gen
  std::int64_t gen_n = 10;
  double gen_p = 0.3;
  bool gen_directed = false;
  std::int64_t gen_lo = 0, gen_hi = 9;
};

class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A printed certificate failed its own checker.
class CertificateFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Report {
  std::vector<std::string> lines;
  json result = json::object();
  json certificate = json::object();
  std::optional<std::string> oracle;
};

void certify(const std::optional<std::string>& bad, const std::string& what) {
  if (bad) throw CertificateFailure(what + ": " + *bad);
}

void agree(bool ok, const std::string& what) {
  if (!ok) throw OracleMismatch(what);
}

std::string dist_text(Weight d) { return d == kInfinity ? "inf" : std::to_string(d); }
json dist_json(Weight d) { return d == kInfinity ? json(nullptr) : json(d); }

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i] + 1);
  return s;
}

// Rotation starting at the smallest vertex; undirected cycles also turn
// towards the smaller neighbour.
std::vector<Vertex> canonical(std::vector<Vertex> cycle, bool directed) {
  if (cycle.empty()) return cycle;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  if (!directed && cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

json one_based(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

Graph load_graph(const RunConfig& c) {
  if (c.graph.empty()) throw InputError("--graph is required");
  return parse_graph(read_file(c.graph));
}

EliminationForest load_forest(const RunConfig& c, const Graph& g) {
  const int sources = !c.forest.empty() + !c.td.empty() + c.fallback;
  if (sources != 1) throw InputError("give exactly one of --forest, --td, --fallback");
  EliminationForest f;
  if (c.fallback) {
    f = dfs_fallback_forest(g);
  } else if (!c.forest.empty()) {
    f = parse_forest(read_file(c.forest), g.num_vertices());
  } else {
    TreeDecomposition td = parse_decomposition(read_file(c.td), g.num_vertices());
    if (auto bad = validate_decomposition(g, td)) throw InputError("invalid tree decomposition: " + *bad);
    f = forest_from_decomposition(g, td);
  }
  if (auto id = validate_forest(g, f)) {
    const Edge& e = g.edge(*id);
    throw InputError("edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) +
                     " joins vertices that are not in ancestor relation in the forest");
  }
  return f;
}

void need_directed(const Graph& g, bool directed, const std::string& cmd) {
  if (g.directed() != directed)
    throw InputError(cmd + " needs " + (directed ? "a directed" : "an undirected") + " graph");
}

void need_nonnegative(const Graph& g, const std::string& cmd) {
  if (g.has_negative_weight()) throw InputError(cmd + " needs nonnegative weights");
}

void put_matching(Report& r, const Graph& g, const Matching& m, const std::string& head) {
  certify(check_matching(g, m), "matching");
  r.lines.push_back(head);
  json edges = json::array();
  for (auto [u, v] : m.edges) {
    r.lines.push_back(std::to_string(u + 1) + " " + std::to_string(v + 1));
    edges.push_back({u + 1, v + 1});
  }
  r.result["size"] = m.size();
  r.result["weight"] = m.weight(g);
  r.result["edges"] = edges;
}

Report run_matching(const RunConfig& c) {
  Graph g = load_graph(c);
  need_directed(g, false, "matching");
  EliminationForest f = load_forest(c, g);
  Matching m = max_matching_td(g, f);
  Report r;
  put_matching(r, g, m, "matching size " + std::to_string(m.size()));
  r.certificate["type"] = "matching";
  if (c.oracle) {
    auto want = oracle::brute_max_matching(g).weight;
    agree(static_cast<Weight>(m.size()) == want,
          "matching size " + std::to_string(m.size()) + ", exhaustive search finds " + std::to_string(want));
  }
  return r;
}

bool check_a_paths(const Graph& g, const std::vector<Vertex>& terminals, const DisjointPaths& p, std::string& why) {
  std::vector<char> is_terminal(g.num_vertices(), 0);
  for (Vertex a : terminals) is_terminal[a] = 1;
  std::unordered_set<Vertex> used;
  Weight total = 0;
  for (const auto& path : p.paths) {
    if (path.size() < 2) return why = "path with fewer than two vertices", false;
    if (!is_terminal[path.front()] || !is_terminal[path.back()]) return why = "path endpoint is not a terminal", false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (!used.insert(path[i]).second) return why = "paths share vertex " + std::to_string(path[i] + 1), false;
      if (i > 0 && i + 1 < path.size() && is_terminal[path[i]]) return why = "terminal inside a path", false;
      if (i + 1 < path.size()) {
        auto id = g.find_edge(path[i], path[i + 1]);
        if (!id) return why = "path uses a missing arc", false;
        total = checked_add(total, g.edge(*id).w);
      }
    }
  }
  if (total != p.weight) return why = "stated weight is wrong", false;
  return true;
}

Report run_wmatching(const RunConfig& c) {
  Graph g = load_graph(c);
  Report r;
  r.result["variant"] = c.variant;
  if (c.variant == "apaths") {
    need_directed(g, true, "wmatching --variant apaths");
    need_nonnegative(g, "wmatching --variant apaths");
    if (c.terminals.empty()) throw InputError("--terminals is required for the apaths variant");
    EliminationForest f = load_forest(c, g);
    auto terminals = parse_vertex_list(read_file(c.terminals), g.num_vertices());
    DisjointPaths p = min_weight_disjoint_a_paths_td(g, terminals, f);
    std::string why;
    if (!check_a_paths(g, terminals, p, why)) throw CertificateFailure("A-paths: " + why);
    r.lines.push_back("paths " + std::to_string(p.paths.size()) + " weight " + std::to_string(p.weight));
    json paths = json::array();
    for (const auto& path : p.paths) {
      r.lines.push_back("path: " + join(path));
      paths.push_back(one_based(path));
    }
    r.result["count"] = p.paths.size();
    r.result["weight"] = p.weight;
    r.result["paths"] = paths;
    r.certificate["type"] = "disjoint-paths";
    if (c.oracle) {
      auto want = oracle::brute_disjoint_a_paths(g, terminals);
      agree(want.count == p.paths.size() && want.weight == p.weight,
            "found " + std::to_string(p.paths.size()) + " paths of weight " + std::to_string(p.weight) +
                ", exhaustive search finds " + std::to_string(want.count) + " of weight " + std::to_string(want.weight));
    }
    return r;
  }

  need_directed(g, false, "wmatching");
  EliminationForest f = load_forest(c, g);
  if (c.variant == "perfect") {
    auto res = mwpm_td(g, f);
    certify(check_matching(g, res.matching), "matching");
    if (res.matching.size() * 2 != static_cast<std::size_t>(g.num_vertices()))
      throw CertificateFailure("matching is not perfect");
    if (auto bad = check_duals(g, f.whole(), res.matching, res.duals))
      throw CertificateFailure("duals violate condition " + std::to_string(bad->condition) + ": " + bad->witness);
    put_matching(r, g, res.matching,
                 "matching weight " + std::to_string(res.matching.weight(g)) + " size " + std::to_string(res.matching.size()));
    r.certificate["type"] = "doubled-duals";
    r.certificate["y2"] = res.duals.y2;
    json blossoms = json::array();
    auto sets = res.duals.omega_sets();
    for (std::size_t b = 0; b < sets.size(); ++b)
      blossoms.push_back({{"vertices", one_based(sets[b])}, {"z2", res.duals.blossoms[b].z2}});
    r.certificate["blossoms"] = blossoms;
    if (c.oracle) {
      auto want = oracle::brute_mwpm(g);
      agree(want && want->weight == res.matching.weight(g), "exhaustive search disagrees on the perfect matching weight");
    }
  } else if (c.variant == "max" || c.variant == "maxsize") {
    const bool maxsize = c.variant == "maxsize";
    Matching m = maxsize ? max_weight_max_size_matching_td(g, f) : max_weight_matching_td(g, f);
    put_matching(r, g, m, "matching weight " + std::to_string(m.weight(g)) + " size " + std::to_string(m.size()));
    r.certificate["type"] = "matching";
    if (c.oracle) {
      auto want = maxsize ? oracle::brute_max_weight_max_size_matching(g) : oracle::brute_max_weight_matching(g);
      agree(want.weight == m.weight(g) && (!maxsize || want.witness.size() == m.size()),
            "exhaustive search finds weight " + std::to_string(want.weight) + " with " +
                std::to_string(want.witness.size()) + " edges");
    }
  } else {
    throw InputError("unknown variant '" + c.variant + "'");
  }
  return r;
}

Report run_negcycle(const RunConfig& c) {
  Graph g = load_graph(c);
  need_directed(g, true, "negcycle");
  EliminationForest f = load_forest(c, g);
  auto res = potential_or_negcycle_td(g, f);
  Report r;
  bool has_cycle = false;
  if (auto* cyc = std::get_if<NegativeCycle>(&res)) {
    certify(check_negative_cycle(g, *cyc), "negative cycle");
    cyc->vertices = canonical(cyc->vertices, true);
    has_cycle = true;
    r.lines.push_back("negative cycle weight " + std::to_string(cyc->weight) + ": " + join(cyc->vertices));
    r.result["negative_cycle"] = true;
    r.result["weight"] = cyc->weight;
    r.result["cycle"] = one_based(cyc->vertices);
    r.certificate["type"] = "cycle";
  } else {
    const Potential& p = std::get<Potential>(res);
    certify(check_potential(g, p), "potential");
    r.lines.push_back("no negative cycle");
    std::string line = "potential:";
    for (Weight x : p) line += " " + std::to_string(x);
    r.lines.push_back(line);
    r.result["negative_cycle"] = false;
    r.certificate["type"] = "potential";
    r.certificate["potential"] = p;
  }
  if (c.oracle && g.num_vertices() > 0) {
    auto want = oracle::bellman_ford(g, 0);
    agree(want.negative_cycle == has_cycle, "Bellman-Ford disagrees on the verdict");
  }
  return r;
}

std::optional<std::string> check_tree(const Graph& g, const ShortestPathTree& t) {
  const Vertex n = g.num_vertices();
  if (t.dist[t.source] != 0) return "source distance is not 0";
  for (const Edge& e : g.edges()) {
    if (t.dist[e.u] == kInfinity) continue;
    if (t.dist[e.v] == kInfinity || t.dist[e.v] > checked_add(t.dist[e.u], e.w))
      return "edge " + std::to_string(e.u + 1) + "->" + std::to_string(e.v + 1) + " can be relaxed";
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == t.source || t.dist[v] == kInfinity) continue;
    Vertex p = t.parent[v];
    auto id = p == kNoVertex ? std::nullopt : g.find_edge(p, v);
    if (!id || t.dist[p] == kInfinity || checked_add(t.dist[p], g.edge(*id).w) != t.dist[v])
      return "tree edge into " + std::to_string(v + 1) + " is not tight";
  }
  return std::nullopt;
}

Report run_sssp(const RunConfig& c) {
  Graph g = load_graph(c);
  need_directed(g, true, "sssp");
  if (c.source < 1 || c.source > g.num_vertices()) throw InputError("--source out of range");
  EliminationForest f = load_forest(c, g);
  const Vertex s = static_cast<Vertex>(c.source - 1);
  auto res = sssp_td(g, f, s);
  Report r;
  if (auto* cyc = std::get_if<NegativeCycle>(&res)) {
    certify(check_negative_cycle(g, *cyc), "negative cycle");
    cyc->vertices = canonical(cyc->vertices, true);
    r.lines.push_back("negative cycle weight " + std::to_string(cyc->weight) + ": " + join(cyc->vertices));
    r.result["negative_cycle"] = true;
    r.result["cycle"] = one_based(cyc->vertices);
    r.certificate["type"] = "cycle";
    if (c.oracle) agree(oracle::bellman_ford(g, s).negative_cycle, "Bellman-Ford finds no negative cycle");
    return r;
  }
  const auto& t = std::get<ShortestPathTree>(res);
  certify(check_tree(g, t), "shortest-path tree");
  json dist = json::array(), parent = json::array();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    r.lines.push_back(std::to_string(v + 1) + " " + dist_text(t.dist[v]));
    dist.push_back(dist_json(t.dist[v]));
    parent.push_back(t.parent[v] == kNoVertex ? json(nullptr) : json(t.parent[v] + 1));
  }
  r.result["negative_cycle"] = false;
  r.result["dist"] = dist;
  r.certificate["type"] = "tree";
  r.certificate["parent"] = parent;
  if (c.oracle) {
    auto want = oracle::bellman_ford(g, s);
    agree(!want.negative_cycle, "Bellman-Ford finds a negative cycle");
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      agree(want.dist[v].value_or(kInfinity) == t.dist[v], "Bellman-Ford disagrees at vertex " + std::to_string(v + 1));
  }
  return r;
}

Report run_mincycle(const RunConfig& c) {
  Graph g = load_graph(c);
  need_nonnegative(g, "mincycle");
  EliminationForest f = load_forest(c, g);
  CycleResult res = min_weight_cycle_td(g, f);
  certify(check_cycle(g, res), "cycle");
  res.cycle = canonical(res.cycle, g.directed());
  Report r;
  if (res.acyclic()) {
    r.lines.push_back("acyclic");
    r.result["weight"] = nullptr;
  } else {
    r.lines.push_back("cycle weight " + std::to_string(*res.weight) + ": " + join(res.cycle));
    r.result["weight"] = *res.weight;
    r.result["cycle"] = one_based(res.cycle);
  }
  r.certificate["type"] = "cycle";
  if (c.oracle) {
    auto want = oracle::brute_min_cycle(g);
    agree(want.weight == res.weight, "enumeration disagrees on the minimum cycle weight");
  }
  return r;
}

Report run_replacement(const RunConfig& c) {
  Graph g = load_graph(c);
  if (c.path.empty()) throw InputError("--path is required");
  EliminationForest f = load_forest(c, g);
  auto path = parse_vertex_list(read_file(c.path), g.num_vertices());
  auto values = replacement_paths_td(g, f, path);
  Report r;
  r.lines.push_back("replacement " + std::to_string(values.size()) + " edges");
  json vals = json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    r.lines.push_back(std::to_string(path[i] + 1) + " " + std::to_string(path[i + 1] + 1) + " " + dist_text(values[i]));
    vals.push_back(dist_json(values[i]));
  }
  r.result["path"] = one_based(path);
  r.result["values"] = vals;
  r.certificate["type"] = "none";
  if (c.oracle) {
    auto want = oracle::naive_replacement(g, path);
    for (std::size_t i = 0; i < values.size(); ++i)
      agree(want[i].value_or(kInfinity) == values[i], "edge deletion disagrees at path edge " + std::to_string(i + 1));
  }
  return r;
}

Report run_2hop_build(const RunConfig& c) {
  Graph g = load_graph(c);
  if (c.out.empty()) throw InputError("--out is required");
  EliminationForest f = load_forest(c, g);
  TwoHopLabels labels = build_two_hop_td(g, f);
  certify(check_two_hop(labels, f), "labels");
  if (c.oracle) {
    auto d = oracle::all_pairs_dijkstra(g);
    for (Vertex s = 0; s < g.num_vertices(); ++s)
      for (Vertex t = 0; t < g.num_vertices(); ++t)
        agree(two_hop_query(labels, s, t) == d[s][t].value_or(kInfinity),
              "Dijkstra disagrees on " + std::to_string(s + 1) + " " + std::to_string(t + 1));
  }
  save_labels(c.out, labels);
  Report r;
  r.lines.push_back("labels " + std::to_string(labels.num_vertices()) + " vertices, max label size " +
                    std::to_string(labels.max_label_size()) + ", forest depth " + std::to_string(f.depth()));
  r.result["vertices"] = labels.num_vertices();
  r.result["max_label_size"] = labels.max_label_size();
  r.result["depth"] = f.depth();
  r.certificate["type"] = "labels";
  r.certificate["file"] = c.out;
  return r;
}

int run_2hop_query(const RunConfig& c, std::istream& in, std::ostream& out) {
  if (c.labels.empty()) throw InputError("--labels is required");
  TwoHopLabels labels = load_labels(c.labels);
  std::vector<std::string> answers;
  std::string line;
  for (std::int64_t line_no = 1; std::getline(in, line); ++line_no) {
    std::istringstream ls(line);
    std::int64_t s, t;
    if (!(ls >> s)) continue;
    std::string rest;
    if (!(ls >> t) || (ls >> rest))
      throw InputError("query line " + std::to_string(line_no) + ": expected '<s> <t>'");
    if (s < 1 || s > labels.num_vertices() || t < 1 || t > labels.num_vertices())
      throw InputError("query line " + std::to_string(line_no) + ": vertex out of range");
    Weight d = two_hop_query(labels, static_cast<Vertex>(s - 1), static_cast<Vertex>(t - 1));
    if (c.format == "jsonl")
      answers.push_back(json{{"s", s}, {"t", t}, {"dist", dist_json(d)}}.dump());
    else
      answers.push_back(dist_text(d));
  }
  for (const auto& a : answers) out << a << '\n';
  return kExitOk;
}

int run_gen(const RunConfig& c, std::ostream& out) {
  if (c.gen_n < 0 || c.gen_n > 1000000) throw InputError("--n out of range");
  if (c.gen_p < 0 || c.gen_p > 1) throw InputError("--p must be in [0, 1]");
  if (c.gen_lo > c.gen_hi) throw InputError("--min-weight exceeds --max-weight");
  std::uint64_t seed = 20240531;
  if (const char* s = std::getenv("TDSOLVE_SEED")) seed = std::strtoull(s, nullptr, 10);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(c.gen_p);
  std::uniform_int_distribution<Weight> weight(c.gen_lo, c.gen_hi);
  const auto n = static_cast<Vertex>(c.gen_n);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = c.gen_directed ? 0 : u + 1; v < n; ++v)
      if (u != v && coin(rng)) edges.push_back({u, v, weight(rng)});
  print_graph(out, Graph(n, c.gen_directed, std::move(edges)));
  return kExitOk;
}

void emit(const RunConfig& c, const Report& r, std::ostream& out) {
  if (c.format == "jsonl") {
    json j{{"command", c.command}, {"result", r.result}, {"certificate", r.certificate}};
    if (c.oracle) j["oracle"] = "agree";
    out << j.dump() << '\n';
    return;
  }
  for (const auto& line : r.lines) out << line << '\n';
  if (c.oracle) out << "oracle: agree\n";
}

int run(const RunConfig& c, std::istream& in, std::ostream& out) {
  if (c.command == "2hop-query") return run_2hop_query(c, in, out);
  if (c.command == "gen") return run_gen(c, out);
  Report r;
  if (c.command == "matching") r = run_matching(c);
  else if (c.command == "wmatching") r = run_wmatching(c);
  else if (c.command == "negcycle") r = run_negcycle(c);
  else if (c.command == "sssp") r = run_sssp(c);
  else if (c.command == "mincycle") r = run_mincycle(c);
  else if (c.command == "replacement") r = run_replacement(c);
  else if (c.command == "2hop-build") r = run_2hop_build(c);
  else throw std::logic_error("unhandled command " + c.command);
  emit(c, r, out);
  return kExitOk;
}

// Solver callbacks wrap their exceptions; classify by the innermost one.
std::exception_ptr innermost(std::exception_ptr p) {
  while (true) {
    try {
      std::rethrow_exception(p);
    } catch (const std::nested_exception& nested) {
      if (!nested.nested_ptr()) return p;
      p = nested.nested_ptr();
    } catch (...) {
      return p;
    }
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Graph algorithms over elimination forests", "tdsolve"};
  app.require_subcommand(1);

  auto with_forest = [&](CLI::App* sub) {
    sub->add_option("--graph", c.graph, "graph file")->required();
    sub->add_option("--forest", c.forest, "elimination forest file");
    sub->add_option("--td", c.td, "tree decomposition file");
    sub->add_flag("--fallback", c.fallback, "use a depth-first spanning forest");
    sub->add_flag("--oracle", c.oracle, "cross-check against a brute-force oracle");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "jsonl"}));
    return sub;
  };
  with_forest(app.add_subcommand("matching", "maximum-cardinality matching"));
  auto* wm = with_forest(app.add_subcommand("wmatching", "weighted matching variants"));
  wm->add_option("--variant", c.variant, "perfect, max, maxsize or apaths")
      ->check(CLI::IsMember({"perfect", "max", "maxsize", "apaths"}));
  wm->add_option("--terminals", c.terminals, "terminal set file for apaths");
  with_forest(app.add_subcommand("negcycle", "potential or negative cycle"));
  with_forest(app.add_subcommand("sssp", "single-source shortest paths"))
      ->add_option("--source", c.source, "source vertex (1-based)")
      ->required();
  with_forest(app.add_subcommand("mincycle", "minimum-weight cycle"));
  with_forest(app.add_subcommand("replacement", "replacement paths"))
      ->add_option("--path", c.path, "file with the s-t path")
      ->required();
  with_forest(app.add_subcommand("2hop-build", "build 2-hop labels"))
      ->add_option("--out", c.out, "label file to write")
      ->required();
  auto* query = app.add_subcommand("2hop-query", "answer distance queries from standard input");
  query->add_option("--labels", c.labels, "label file")->required();
  query->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "jsonl"}));
  auto* gen = app.add_subcommand("gen", "random graph, seeded by TDSOLVE_SEED");
  gen->add_option("--n", c.gen_n, "vertex count");
  gen->add_option("--p", c.gen_p, "edge probability");
  gen->add_flag("--directed", c.gen_directed, "directed graph");
  gen->add_option("--min-weight", c.gen_lo, "smallest weight");
  gen->add_option("--max-weight", c.gen_hi, "largest weight");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    try {
      return run(c, in, out);
    } catch (...) {
      std::rethrow_exception(innermost(std::current_exception()));
    }
  } catch (const OracleMismatch& e) {
    err << "oracle mismatch: " << e.what() << '\n';
    return kExitOracleMismatch;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ImperfectMatchingError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const RefusalError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const OverflowError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace tdsolve::cli
