#pragma once

#include <span>
#include <vector>

#include "starec/graph.hpp"

namespace starec {

/// A cubic Halin graph G = T ∪ C: a tree T without degree-2 vertices plus a
/// cycle C through its leaves in plane-embedding order.
struct HalinGraph {
  Graph graph;
  std::vector<EdgeId> tree_edges;
  /// Leaves of T in cyclic order; cycle_edges[i] joins cycle_order[i] and cycle_order[i+1 mod m].
  std::vector<Vertex> cycle_order;
  std::vector<EdgeId> cycle_edges;
  std::vector<bool> is_tree_edge;

  std::int32_t cycle_length() const { return static_cast<std::int32_t>(cycle_order.size()); }
};

/// Builds T ∪ C from tree edges (vertex ids 0..n-1) and a leaf order. Tree
/// edges keep ids 0..|T|-1; cycle edge i gets id |T|+i.
/// Errors: NotATree, Degree2InternalVertex, CycleOrderMismatch, NotCubic.
HalinGraph build_halin(std::span<const Edge> tree, std::span<const Vertex> cycle_order);

/// Interprets an existing graph as T ∪ C given the leaf cycle; edge ids are kept.
HalinGraph halin_from_graph(const Graph& g, std::span<const Vertex> cycle_order);

}  // namespace starec
