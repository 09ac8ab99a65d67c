#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace starec {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  EdgeId edge;
  Vertex neighbor;
};

/// Undirected loopless multigraph. Edge ids are positions in the edge
/// sequence, so parallel edges stay distinguishable. Immutable once built.
class Graph {
 public:
  Graph() = default;
  Graph(std::int32_t vertex_count, std::vector<Edge> edges);

  std::int32_t vertex_count() const { return static_cast<std::int32_t>(adjacency_.size()); }
  std::int32_t edge_count() const { return static_cast<std::int32_t>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(incident(v).size()); }
  std::int32_t max_degree() const;
  std::int32_t min_degree() const;

  /// Edges sharing at least one endpoint with e (e itself excluded).
  std::vector<EdgeId> adjacent_edges(EdgeId e) const;
  bool adjacent(EdgeId a, EdgeId b) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

struct BipartitePartition {
  std::vector<Vertex> part_x;
  std::vector<Vertex> part_y;
  /// in_x[v] is true iff v belongs to part_x.
  std::vector<bool> in_x;

  BipartitePartition() = default;
  BipartitePartition(std::int32_t vertex_count, std::vector<Vertex> x_vertices);

  /// Throws NotBipartite if the parts do not cover g or some edge stays inside a part.
  void validate(const Graph& g) const;
  std::int32_t max_degree_x(const Graph& g) const;
  std::int32_t max_degree_y(const Graph& g) const;
  /// X = vertices 0..x_count-1.
  static BipartitePartition prefix(std::int32_t vertex_count, std::int32_t x_count);
};

/// Two-colors g by BFS. Within each component, the side with smaller maximum
/// degree becomes X. Returns nullopt when g has an odd cycle.
std::optional<BipartitePartition> infer_bipartition(const Graph& g);

struct CompleteBipartite {
  Graph graph;
  BipartitePartition partition;
};

/// K_{r,d}: X = 0..r-1, Y = r..r+d-1, edge x_i y_j has id i*d + j.
CompleteBipartite complete_bipartite(std::int32_t r, std::int32_t d);

/// C_n with edge i joining i and (i+1) mod n.
Graph cycle_graph(std::int32_t n);

/// Path on n edges: vertices 0..n, edge i joins i and i+1.
Graph path_graph(std::int32_t n);

/// Multigraph on part_y obtained by replacing each degree-2 X vertex with an edge.
struct CondensedGraph {
  Graph graph;
  /// graph vertex h corresponds to original vertex y_of_vertex[h].
  std::vector<Vertex> y_of_vertex;
  /// condensed edge h came from original X vertex x_of_edge[h].
  std::vector<Vertex> x_of_edge;
  /// the two original edges through x_of_edge[h], ordered to match graph.edge(h).u then .v.
  std::vector<std::pair<EdgeId, EdgeId>> original_edges;
};

/// Throws NotBiregular if some X vertex has degree != 2 or both its edges
/// reach the same Y vertex (would condense to a loop).
CondensedGraph condense(const Graph& g, const BipartitePartition& p);

struct SubdividedGraph {
  Graph graph;
  BipartitePartition partition;  // X = subdivision vertices
};

/// Subdivides every edge once. Original vertex v keeps id v; the vertex on
/// edge e is h.vertex_count() + e. Edge 2e joins u to it, edge 2e+1 joins it to v.
SubdividedGraph subdivide(const Graph& h);

/// Subgraph formed by a subset of edges, with isolated vertices dropped.
struct EdgeSubgraph {
  Graph graph;
  std::vector<EdgeId> parent_edge;
  std::vector<Vertex> parent_vertex;
  /// parent vertex -> local vertex, -1 if absent.
  std::vector<Vertex> local_vertex;
};

EdgeSubgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

/// Length of a shortest cycle; nullopt for forests. Parallel edges count as 2-cycles.
std::optional<std::int32_t> girth(const Graph& g);

/// Edge ids of a shortest cycle in cyclic order, restricted to edges with
/// active[e] (all edges if active is empty). Empty if acyclic.
std::vector<EdgeId> shortest_cycle(const Graph& g, const std::vector<bool>& active = {});

/// Maximum-cardinality matching; returns the matched edge ids. Backed by
/// Edmonds' algorithm, so it works on general graphs.
std::vector<EdgeId> maximum_matching(const Graph& g);

/// A perfect matching, or nullopt if none exists.
std::optional<std::vector<EdgeId>> find_perfect_matching(const Graph& g);

/// Connected components as lists of vertices.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace starec
