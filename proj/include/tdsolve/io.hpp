#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tdsolve/forest.hpp"
#include "tdsolve/graph.hpp"

namespace tdsolve {

// All text formats use 1-based vertex ids and allow comment lines starting
// with 'c'. Parse errors are InputError with the offending line number.

/// Header `p sp <n> <m> <d|u>`, then m lines `a <u> <v> <w>`.
Graph parse_graph(std::string_view text);
void print_graph(std::ostream& os, const Graph& g);

/// One line `<vertex> <parent>` per vertex, parent 0 for a root.
EliminationForest parse_forest(std::string_view text, Vertex n);
void print_forest(std::ostream& os, const EliminationForest& f);

/// PACE style: `s td <bags> <width+1> <n>`, lines `b <i> <v...>`, then one
/// `<i> <j>` line per tree edge.
TreeDecomposition parse_decomposition(std::string_view text, Vertex n);
void print_decomposition(std::ostream& os, const TreeDecomposition& td, Vertex n);

/// Whitespace separated vertex ids, for paths and terminal sets.
std::vector<Vertex> parse_vertex_list(std::string_view text, Vertex n);

/// Whole file contents; InputError when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace tdsolve
