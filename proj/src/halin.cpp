#include "starec/halin.hpp"

#include <algorithm>
#include <string>

#include "starec/error.hpp"

namespace starec {
namespace {

void validate_tree(std::int32_t n, std::span<const Edge> tree) {
  if (n < 2 || static_cast<std::int32_t>(tree.size()) != n - 1) {
    throw Error(ErrorCode::NotATree, "a tree on " + std::to_string(n) + " vertices needs " +
                                         std::to_string(n - 1) + " edges, got " + std::to_string(tree.size()));
  }
  // Union-find: n-1 edges with no cycle means spanning tree.
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Edge& e : tree) {
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) throw Error(ErrorCode::NotATree, "tree edges contain a cycle");
    parent[static_cast<std::size_t>(a)] = b;
  }
}

// Every subtree's leaves must occupy a contiguous arc of the cycle order.
void validate_leaf_order(const Graph& tree, std::span<const Vertex> order, Vertex root) {
  const auto n = static_cast<std::size_t>(tree.vertex_count());
  const auto m = static_cast<std::int32_t>(order.size());
  std::vector<std::int32_t> position(n, -1);
  for (std::int32_t i = 0; i < m; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> dfs_order;
  std::vector<Vertex> stack{root};
  parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    dfs_order.push_back(v);
    for (const Incidence& inc : tree.incident(v)) {
      if (parent[static_cast<std::size_t>(inc.neighbor)] == -1) {
        parent[static_cast<std::size_t>(inc.neighbor)] = v;
        stack.push_back(inc.neighbor);
      }
    }
  }
  std::vector<std::vector<std::int32_t>> leaves(n);
  for (auto it = dfs_order.rbegin(); it != dfs_order.rend(); ++it) {
    const Vertex v = *it;
    auto& mine = leaves[static_cast<std::size_t>(v)];
    if (position[static_cast<std::size_t>(v)] >= 0) mine.push_back(position[static_cast<std::size_t>(v)]);
    if (v == root) break;
    const auto k = static_cast<std::int32_t>(mine.size());
    std::vector<bool> in(static_cast<std::size_t>(m), false);
    for (auto p : mine) in[static_cast<std::size_t>(p)] = true;
    std::int32_t links = 0;
    for (auto p : mine) links += in[static_cast<std::size_t>((p + 1) % m)] ? 1 : 0;
    if (k < m && links != k - 1) {
      throw Error(ErrorCode::CycleOrderMismatch,
                  "leaves below vertex " + std::to_string(v) + " are not consecutive on the cycle");
    }
    auto& up = leaves[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    up.insert(up.end(), mine.begin(), mine.end());
    mine.clear();
  }
}

HalinGraph finish(Graph g, std::vector<bool> is_tree_edge, std::span<const Vertex> cycle_order,
                  std::vector<EdgeId> cycle_edges) {
  const std::int32_t n = g.vertex_count();
  std::vector<Edge> tree;
  std::vector<EdgeId> tree_ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_tree_edge[static_cast<std::size_t>(e)]) {
      tree.push_back(g.edge(e));
      tree_ids.push_back(e);
    }
  }
  validate_tree(n, tree);
  const Graph t(n, tree);
  std::vector<bool> leaf(static_cast<std::size_t>(n), false);
  Vertex internal = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) == 2) {
      throw Error(ErrorCode::Degree2InternalVertex, "tree vertex " + std::to_string(v) + " has degree 2");
    }
    leaf[static_cast<std::size_t>(v)] = t.degree(v) == 1;
    if (!leaf[static_cast<std::size_t>(v)] && internal == -1) internal = v;
  }
  std::vector<bool> listed(static_cast<std::size_t>(n), false);
  for (Vertex v : cycle_order) {
    if (v < 0 || v >= n || !leaf[static_cast<std::size_t>(v)] || listed[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::CycleOrderMismatch, "cycle order must list each tree leaf exactly once");
    }
    listed[static_cast<std::size_t>(v)] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (leaf[static_cast<std::size_t>(v)] && !listed[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::CycleOrderMismatch, "leaf " + std::to_string(v) + " missing from the cycle order");
    }
  }
  if (cycle_order.size() < 3 || internal == -1) {
    throw Error(ErrorCode::CycleOrderMismatch, "the leaf cycle needs at least 3 vertices");
  }
  validate_leaf_order(t, cycle_order, internal);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 3) {
      throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  HalinGraph h;
  h.graph = std::move(g);
  h.tree_edges = std::move(tree_ids);
  h.cycle_order.assign(cycle_order.begin(), cycle_order.end());
  h.cycle_edges = std::move(cycle_edges);
  h.is_tree_edge = std::move(is_tree_edge);
  return h;
}

}  // namespace

HalinGraph build_halin(std::span<const Edge> tree, std::span<const Vertex> cycle_order) {
  Vertex max_vertex = -1;
  for (const Edge& e : tree) max_vertex = std::max({max_vertex, e.u, e.v});
  const std::int32_t n = max_vertex + 1;
  validate_tree(n, tree);
  std::vector<Edge> edges(tree.begin(), tree.end());
  std::vector<bool> is_tree(edges.size(), true);
  std::vector<EdgeId> cycle_edges;
  const auto m = cycle_order.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex a = cycle_order[i];
    const Vertex b = cycle_order[(i + 1) % m];
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
      throw Error(ErrorCode::CycleOrderMismatch, "cycle order names an invalid vertex");
    }
    cycle_edges.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({a, b});
    is_tree.push_back(false);
  }
  return finish(Graph(n, std::move(edges)), std::move(is_tree), cycle_order, std::move(cycle_edges));
}

HalinGraph halin_from_graph(const Graph& g, std::span<const Vertex> cycle_order) {
  std::vector<bool> is_tree(static_cast<std::size_t>(g.edge_count()), true);
  std::vector<EdgeId> cycle_edges;
  const auto m = cycle_order.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex a = cycle_order[i];
    const Vertex b = cycle_order[(i + 1) % m];
    if (a < 0 || a >= g.vertex_count() || b < 0 || b >= g.vertex_count()) {
      throw Error(ErrorCode::CycleOrderMismatch, "cycle order names an invalid vertex");
    }
    EdgeId found = -1;
    for (const Incidence& inc : g.incident(a)) {
      if (inc.neighbor == b && is_tree[static_cast<std::size_t>(inc.edge)]) {
        found = inc.edge;
        break;
      }
    }
    if (found == -1) {
      throw Error(ErrorCode::CycleOrderMismatch,
                  "no edge joins consecutive cycle vertices " + std::to_string(a) + " and " + std::to_string(b));
    }
    is_tree[static_cast<std::size_t>(found)] = false;
    cycle_edges.push_back(found);
  }
  return finish(g, std::move(is_tree), cycle_order, std::move(cycle_edges));
}

}  // namespace starec
