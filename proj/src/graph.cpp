#include "starec/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "starec/error.hpp"

namespace starec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::PartialColoring: return "PartialColoring";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::NotBiregular: return "NotBiregular";
    case ErrorCode::NotEvenRegular: return "NotEvenRegular";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::Degree2InternalVertex: return "Degree2InternalVertex";
    case ErrorCode::CycleOrderMismatch: return "CycleOrderMismatch";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotHalin: return "NotHalin";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::OddCycle: return "OddCycle";
    case ErrorCode::NotCycleFamily: return "NotCycleFamily";
    case ErrorCode::ListTooSmall: return "ListTooSmall";
    case ErrorCode::NoTwoFactorFound: return "NoTwoFactorFound";
    case ErrorCode::InternalCaseExhaustion: return "InternalCaseExhaustion";
    case ErrorCode::NotPerfectMatching: return "NotPerfectMatching";
    case ErrorCode::GirthTooSmall: return "GirthTooSmall";
    case ErrorCode::ThreeColoringNotFound: return "ThreeColoringNotFound";
    case ErrorCode::RTooLarge: return "RTooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

Graph::Graph(std::int32_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::LoopEdge, "edge " + std::to_string(i) + " is a loop");
    }
    const auto id = static_cast<EdgeId>(i);
    adjacency_[static_cast<std::size_t>(e.u)].push_back({id, e.v});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({id, e.u});
  }
}

std::int32_t Graph::max_degree() const {
  std::int32_t best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::int32_t Graph::min_degree() const {
  if (vertex_count() == 0) return 0;
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<EdgeId> Graph::adjacent_edges(EdgeId e) const {
  std::vector<EdgeId> out;
  const Edge& ed = edge(e);
  for (Vertex end : {ed.u, ed.v}) {
    for (const Incidence& inc : incident(end)) {
      if (inc.edge != e) out.push_back(inc.edge);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Graph::adjacent(EdgeId a, EdgeId b) const {
  if (a == b) return false;
  const Edge& x = edge(a);
  const Edge& y = edge(b);
  return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
}

BipartitePartition::BipartitePartition(std::int32_t vertex_count, std::vector<Vertex> x_vertices)
    : part_x(std::move(x_vertices)), in_x(static_cast<std::size_t>(vertex_count), false) {
  for (Vertex v : part_x) {
    if (v < 0 || v >= vertex_count) throw Error(ErrorCode::InvalidArgument, "partition vertex out of range");
    if (in_x[static_cast<std::size_t>(v)]) throw Error(ErrorCode::InvalidArgument, "duplicate vertex in part X");
    in_x[static_cast<std::size_t>(v)] = true;
  }
  std::sort(part_x.begin(), part_x.end());
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (!in_x[static_cast<std::size_t>(v)]) part_y.push_back(v);
  }
}

BipartitePartition BipartitePartition::prefix(std::int32_t vertex_count, std::int32_t x_count) {
  std::vector<Vertex> xs(static_cast<std::size_t>(x_count));
  std::iota(xs.begin(), xs.end(), 0);
  return BipartitePartition(vertex_count, std::move(xs));
}

void BipartitePartition::validate(const Graph& g) const {
  if (static_cast<std::int32_t>(in_x.size()) != g.vertex_count()) {
    throw Error(ErrorCode::NotBipartite, "partition does not cover the vertex set");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (in_x[static_cast<std::size_t>(ed.u)] == in_x[static_cast<std::size_t>(ed.v)]) {
      throw Error(ErrorCode::NotBipartite, "edge " + std::to_string(e) + " lies inside one part");
    }
  }
}

std::int32_t BipartitePartition::max_degree_x(const Graph& g) const {
  std::int32_t best = 0;
  for (Vertex v : part_x) best = std::max(best, g.degree(v));
  return best;
}

std::int32_t BipartitePartition::max_degree_y(const Graph& g) const {
  std::int32_t best = 0;
  for (Vertex v : part_y) best = std::max(best, g.degree(v));
  return best;
}

std::optional<BipartitePartition> infer_bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> side(n, -1);
  std::vector<Vertex> xs;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (side[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Vertex> comp{root};
    side[static_cast<std::size_t>(root)] = 0;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const Vertex v = comp[head];
      for (const Incidence& inc : g.incident(v)) {
        auto& s = side[static_cast<std::size_t>(inc.neighbor)];
        if (s == -1) {
          s = 1 - side[static_cast<std::size_t>(v)];
          comp.push_back(inc.neighbor);
        } else if (s == side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
    std::int32_t max0 = 0;
    std::int32_t max1 = 0;
    for (Vertex v : comp) {
      (side[static_cast<std::size_t>(v)] == 0 ? max0 : max1) =
          std::max(side[static_cast<std::size_t>(v)] == 0 ? max0 : max1, g.degree(v));
    }
    const int x_side = max1 < max0 ? 1 : 0;
    for (Vertex v : comp) {
      if (side[static_cast<std::size_t>(v)] == x_side) xs.push_back(v);
    }
  }
  return BipartitePartition(g.vertex_count(), std::move(xs));
}

CompleteBipartite complete_bipartite(std::int32_t r, std::int32_t d) {
  if (r < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "K_{r,d} needs r, d >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(r) * static_cast<std::size_t>(d));
  for (Vertex i = 0; i < r; ++i) {
    for (Vertex j = 0; j < d; ++j) edges.push_back({i, r + j});
  }
  return {Graph(r + d, std::move(edges)), BipartitePartition::prefix(r + d, r)};
}

Graph cycle_graph(std::int32_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(std::int32_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative path length");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n + 1, std::move(edges));
}

CondensedGraph condense(const Graph& g, const BipartitePartition& p) {
  p.validate(g);
  CondensedGraph out;
  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex y : p.part_y) {
    local[static_cast<std::size_t>(y)] = static_cast<Vertex>(out.y_of_vertex.size());
    out.y_of_vertex.push_back(y);
  }
  std::vector<Edge> edges;
  for (Vertex x : p.part_x) {
    const auto inc = g.incident(x);
    if (inc.size() != 2) {
      throw Error(ErrorCode::NotBiregular,
                  "X vertex " + std::to_string(x) + " has degree " + std::to_string(inc.size()));
    }
    if (inc[0].neighbor == inc[1].neighbor) {
      throw Error(ErrorCode::NotBiregular,
                  "X vertex " + std::to_string(x) + " has both edges to one Y vertex");
    }
    edges.push_back({local[static_cast<std::size_t>(inc[0].neighbor)],
                     local[static_cast<std::size_t>(inc[1].neighbor)]});
    out.x_of_edge.push_back(x);
    out.original_edges.emplace_back(inc[0].edge, inc[1].edge);
  }
  out.graph = Graph(static_cast<std::int32_t>(out.y_of_vertex.size()), std::move(edges));
  return out;
}

SubdividedGraph subdivide(const Graph& h) {
  const std::int32_t n = h.vertex_count();
  std::vector<Edge> edges;
  std::vector<Vertex> xs;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Vertex mid = n + e;
    edges.push_back({h.edge(e).u, mid});
    edges.push_back({mid, h.edge(e).v});
    xs.push_back(mid);
  }
  const std::int32_t total = n + h.edge_count();
  return {Graph(total, std::move(edges)), BipartitePartition(total, std::move(xs))};
}

EdgeSubgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  EdgeSubgraph out;
  out.local_vertex.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Edge> local_edges;
  auto map_vertex = [&](Vertex v) {
    auto& slot = out.local_vertex[static_cast<std::size_t>(v)];
    if (slot == -1) {
      slot = static_cast<Vertex>(out.parent_vertex.size());
      out.parent_vertex.push_back(v);
    }
    return slot;
  };
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    const Vertex a = map_vertex(ed.u);
    const Vertex b = map_vertex(ed.v);
    local_edges.push_back({a, b});
    out.parent_edge.push_back(e);
  }
  out.graph = Graph(static_cast<std::int32_t>(out.parent_vertex.size()), std::move(local_edges));
  return out;
}

namespace {

struct BfsTree {
  std::vector<std::int32_t> dist;
  std::vector<EdgeId> parent_edge;
};

}  // namespace

std::vector<EdgeId> shortest_cycle(const Graph& g, const std::vector<bool>& active) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  auto is_active = [&](EdgeId e) { return active.empty() || active[static_cast<std::size_t>(e)]; };
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  std::vector<EdgeId> best_cycle;
  BfsTree t{std::vector<std::int32_t>(n), std::vector<EdgeId>(n)};

  auto path_to_root = [&](Vertex v) {
    std::vector<EdgeId> path;
    while (t.parent_edge[static_cast<std::size_t>(v)] != -1) {
      const EdgeId e = t.parent_edge[static_cast<std::size_t>(v)];
      path.push_back(e);
      v = g.edge(e).other(v);
    }
    return path;
  };

  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::fill(t.dist.begin(), t.dist.end(), -1);
    std::fill(t.parent_edge.begin(), t.parent_edge.end(), -1);
    t.dist[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      const auto dv = t.dist[static_cast<std::size_t>(v)];
      if (2 * dv + 1 >= best) break;
      for (const Incidence& inc : g.incident(v)) {
        if (!is_active(inc.edge) || inc.edge == t.parent_edge[static_cast<std::size_t>(v)]) continue;
        const auto w = static_cast<std::size_t>(inc.neighbor);
        if (t.dist[w] == -1) {
          t.dist[w] = dv + 1;
          t.parent_edge[w] = inc.edge;
          queue.push_back(inc.neighbor);
        } else if (t.dist[w] >= dv) {
          const std::int32_t len = dv + t.dist[w] + 1;
          if (len >= best) continue;
          // Closed walk s -> v, edge, w -> s; accept only if it is a simple cycle.
          std::vector<EdgeId> left = path_to_root(v);
          std::vector<EdgeId> right = path_to_root(inc.neighbor);
          std::vector<Vertex> seen;
          bool simple = true;
          Vertex cur = v;
          seen.push_back(cur);
          for (EdgeId e : left) {
            cur = g.edge(e).other(cur);
            seen.push_back(cur);
          }
          cur = inc.neighbor;
          seen.push_back(cur);
          for (EdgeId e : right) {
            cur = g.edge(e).other(cur);
            if (cur != s) seen.push_back(cur);
          }
          std::sort(seen.begin(), seen.end());
          simple = std::adjacent_find(seen.begin(), seen.end()) == seen.end() &&
                   static_cast<std::int32_t>(seen.size()) == len;
          if (!simple) continue;
          best = len;
          best_cycle.clear();
          // s -> ... -> v, v-w, w -> ... -> s
          best_cycle.assign(left.rbegin(), left.rend());
          best_cycle.push_back(inc.edge);
          best_cycle.insert(best_cycle.end(), right.begin(), right.end());
        }
      }
    }
  }
  return best_cycle;
}

std::optional<std::int32_t> girth(const Graph& g) {
  const auto cycle = shortest_cycle(g);
  if (cycle.empty()) return std::nullopt;
  return static_cast<std::int32_t>(cycle.size());
}

std::vector<EdgeId> maximum_matching(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(static_cast<std::size_t>(g.vertex_count()));
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<EdgeId> matched;
  const auto null_vertex = boost::graph_traits<BoostGraph>::null_vertex();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto m = mate[static_cast<std::size_t>(v)];
    if (m == null_vertex || static_cast<Vertex>(m) < v) continue;
    for (const Incidence& inc : g.incident(v)) {
      if (inc.neighbor == static_cast<Vertex>(m)) {
        matched.push_back(inc.edge);
        break;
      }
    }
  }
  std::sort(matched.begin(), matched.end());
  return matched;
}

std::optional<std::vector<EdgeId>> find_perfect_matching(const Graph& g) {
  auto m = maximum_matching(g);
  if (2 * static_cast<std::int32_t>(m.size()) != g.vertex_count()) return std::nullopt;
  return m;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<Vertex> comp{root};
    seen[static_cast<std::size_t>(root)] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const Incidence& inc : g.incident(comp[head])) {
        if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
          seen[static_cast<std::size_t>(inc.neighbor)] = true;
          comp.push_back(inc.neighbor);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace starec
