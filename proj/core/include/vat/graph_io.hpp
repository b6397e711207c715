#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "vat/graph.hpp"

namespace vat {

// Edge-list text format:
//
//   # n=6            optional vertex-count hint (otherwise max id + 1)
//   # any comment
//   w 0 2.5 1.0      optional weight line: vertex, cost, value
//   0 1              one edge per line, 0-based, whitespace separated
//
// Weight lines must precede the first edge line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

// Writes the "# n=" hint, weight lines when the graph is weighted, then every
// edge once with u < v in sorted order.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

std::string to_edge_list(const Graph& g);

} // namespace vat
