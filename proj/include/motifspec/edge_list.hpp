#pragma once

// Plain-text edge lists:
//
//   # optional comment lines anywhere
//   n m
//   u v        (m lines, 0-indexed endpoints)

#include <filesystem>
#include <iosfwd>
#include <string>

#include "motifspec/graph.hpp"

namespace motifspec {

// Throws InvalidArgument on malformed text, a wrong edge count, or an edge
// rejected by Graph::from_edges.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

std::string to_edge_list_string(const Graph& g);

}  // namespace motifspec
