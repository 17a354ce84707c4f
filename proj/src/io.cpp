#include "tdsolve/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace tdsolve {

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-empty, non-comment line split into tokens; false at the end.
  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
      }
      if (tokens.empty() || tokens[0] == "c") continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(line_no_) + ": " + what);
  }

  template <class T>
  T number(std::string_view tok) const {
    T v{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail("expected an integer, got '" + std::string(tok) + "'");
    return v;
  }

  // 1-based id in [1, n], returned 0-based.
  Vertex vertex(std::string_view tok, Vertex n) const {
    auto v = number<std::int64_t>(tok);
    if (v < 1 || v > n) fail("vertex " + std::string(tok) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::int64_t line_no_ = 0;
};

}  // namespace

Graph parse_graph(std::string_view text) {
  LineReader in(text);
  std::vector<std::string_view> tok;
  if (!in.next(tok)) throw InputError("graph file has no header");
  if (tok.size() != 5 || tok[0] != "p" || tok[1] != "sp" || (tok[4] != "d" && tok[4] != "u"))
    in.fail("expected header 'p sp <n> <m> <d|u>'");
  const auto n = in.number<std::int64_t>(tok[2]);
  const auto m = in.number<std::int64_t>(tok[3]);
  if (n < 0 || n > std::numeric_limits<Vertex>::max()) in.fail("bad vertex count");
  if (m < 0) in.fail("bad edge count");
  const bool directed = tok[4] == "d";

  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (in.next(tok)) {
    if (tok[0] == "p") in.fail("second header");
    if (tok[0] != "a" || tok.size() != 4) in.fail("expected 'a <u> <v> <w>'");
    Vertex u = in.vertex(tok[1], static_cast<Vertex>(n)), v = in.vertex(tok[2], static_cast<Vertex>(n));
    Weight w = in.number<Weight>(tok[3]);
    if (u == v) in.fail("self-loop at vertex " + std::to_string(u + 1));
    auto key = directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) in.fail("duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    if (static_cast<std::int64_t>(edges.size()) == m) in.fail("more edges than the header announces");
    edges.push_back({u, v, w});
  }
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw InputError("header announces " + std::to_string(m) + " edges but the file has " + std::to_string(edges.size()));
  return Graph(static_cast<Vertex>(n), directed, std::move(edges));
}

void print_graph(std::ostream& os, const Graph& g) {
  os << "p sp " << g.num_vertices() << ' ' << g.num_edges() << ' ' << (g.directed() ? 'd' : 'u') << '\n';
  for (const Edge& e : g.edges()) os << "a " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

EliminationForest parse_forest(std::string_view text, Vertex n) {
  LineReader in(text);
  std::vector<std::string_view> tok;
  std::vector<std::optional<Vertex>> parent(n);
  std::vector<char> given(n, 0);
  while (in.next(tok)) {
    if (tok.size() != 2) in.fail("expected '<vertex> <parent>'");
    Vertex v = in.vertex(tok[0], n);
    if (given[v]) in.fail("vertex " + std::to_string(v + 1) + " listed twice");
    given[v] = 1;
    if (tok[1] != "0") {
      Vertex p = in.vertex(tok[1], n);
      if (p == v) in.fail("vertex " + std::to_string(v + 1) + " is its own parent");
      parent[v] = p;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!given[v]) throw InputError("forest file has no line for vertex " + std::to_string(v + 1));
  // 0 unvisited, 1 on the current walk, 2 known to reach a root
  std::vector<char> state(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> walk;
    Vertex v = s;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      if (!parent[v]) break;
      v = *parent[v];
    }
    if (state[v] == 1 && parent[v]) throw InputError("forest parents contain a cycle through vertex " + std::to_string(v + 1));
    for (Vertex u : walk) state[u] = 2;
  }
  return EliminationForest(std::move(parent));
}

void print_forest(std::ostream& os, const EliminationForest& f) {
  for (Vertex v = 0; v < f.size(); ++v) os << v + 1 << ' ' << (f.parent(v) ? *f.parent(v) + 1 : 0) << '\n';
}

TreeDecomposition parse_decomposition(std::string_view text, Vertex n) {
  LineReader in(text);
  std::vector<std::string_view> tok;
  if (!in.next(tok)) throw InputError("decomposition file has no header");
  if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td") in.fail("expected header 's td <bags> <width+1> <n>'");
  const auto bags = in.number<std::int64_t>(tok[2]);
  const auto size = in.number<std::int64_t>(tok[3]);
  if (in.number<std::int64_t>(tok[4]) != n) in.fail("decomposition is for " + std::string(tok[4]) + " vertices, graph has " + std::to_string(n));
  if (bags < 0 || bags > std::numeric_limits<std::int32_t>::max()) in.fail("bad bag count");

  TreeDecomposition td;
  td.bags.resize(bags);
  std::vector<char> given(bags, 0);
  auto bag_id = [&](std::string_view t) {
    auto i = in.number<std::int64_t>(t);
    if (i < 1 || i > bags) in.fail("bag " + std::string(t) + " out of range 1.." + std::to_string(bags));
    return static_cast<std::int32_t>(i - 1);
  };
  while (in.next(tok)) {
    if (tok[0] == "b") {
      if (tok.size() < 2) in.fail("bag line without an index");
      auto i = bag_id(tok[1]);
      if (given[i]) in.fail("bag " + std::string(tok[1]) + " listed twice");
      given[i] = 1;
      if (static_cast<std::int64_t>(tok.size()) - 2 > size) in.fail("bag larger than the header announces");
      for (std::size_t j = 2; j < tok.size(); ++j) td.bags[i].push_back(in.vertex(tok[j], n));
    } else {
      if (tok.size() != 2) in.fail("expected a bag line or '<i> <j>'");
      td.tree.emplace_back(bag_id(tok[0]), bag_id(tok[1]));
    }
  }
  for (std::int64_t i = 0; i < bags; ++i)
    if (!given[i]) throw InputError("decomposition file has no line for bag " + std::to_string(i + 1));
  return td;
}

void print_decomposition(std::ostream& os, const TreeDecomposition& td, Vertex n) {
  std::size_t size = 0;
  for (const auto& b : td.bags) size = std::max(size, b.size());
  os << "s td " << td.bags.size() << ' ' << size << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    os << "b " << i + 1;
    for (Vertex v : td.bags[i]) os << ' ' << v + 1;
    os << '\n';
  }
  for (auto [a, b] : td.tree) os << a + 1 << ' ' << b + 1 << '\n';
}

std::vector<Vertex> parse_vertex_list(std::string_view text, Vertex n) {
  LineReader in(text);
  std::vector<std::string_view> tok;
  std::vector<Vertex> out;
  while (in.next(tok))
    for (auto t : tok) out.push_back(in.vertex(t, n));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return buf.str();
}

}  // namespace tdsolve
