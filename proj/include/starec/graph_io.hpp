#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "starec/coloring.hpp"
#include "starec/graph.hpp"

namespace starec {

/// Contents of a graph file:
///
///   graph <n> <m>
///   [bipartite <|X|>]        X = vertices 0..|X|-1
///   [halin <v_1> ... <v_k>]  leaf cycle in embedding order
///   <u> <v>                  m edge lines, 0-based
///
/// Text after '#' on any line is ignored.
struct GraphFile {
  Graph graph;
  std::optional<std::int32_t> bipartite_x;
  std::optional<std::vector<Vertex>> halin_cycle;
};

GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const GraphFile& file);
void write_graph(std::ostream& out, const Graph& g, std::optional<std::int32_t> bipartite_x = std::nullopt);
void write_graph_file(const std::string& path, const GraphFile& file);

/// Coloring file: `coloring <m>` with m the edge count, then one
/// `<edge-id> <color>` line per colored edge. Missing edges stay uncolored.
EdgeColoring read_coloring(std::istream& in);
EdgeColoring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const EdgeColoring& c);
void write_coloring_file(const std::string& path, const EdgeColoring& c);

/// Edge-id list, one id per line (used for matchings).
std::vector<EdgeId> read_edge_list(std::istream& in);
std::vector<EdgeId> read_edge_list_file(const std::string& path);

}  // namespace starec
