#include "starec/bireg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "starec/error.hpp"
#include "starec/search.hpp"
#include "starec/verify.hpp"

namespace starec {
namespace {

void require_degrees(const Graph& g, const BipartitePartition& p, std::int32_t max_y) {
  p.validate(g);
  if (p.max_degree_x(g) > 2) throw Error(ErrorCode::DegreeViolation, "an X vertex has degree above 2");
  if (p.max_degree_y(g) > max_y) {
    throw Error(ErrorCode::DegreeViolation, "a Y vertex has degree above " + std::to_string(max_y));
  }
}

void require_star(const Graph& g, const EdgeColoring& c, const char* what) {
  if (auto v = check_star(g, c)) {
    throw Error(ErrorCode::InternalCaseExhaustion, std::string(what) + " produced a non-star coloring");
  }
}

// Drops isolated vertices; edge ids are unchanged because every edge is kept in order.
struct Compact {
  EdgeSubgraph sub;
  BipartitePartition partition;
};

Compact compact(const Graph& g, const BipartitePartition& p) {
  std::vector<EdgeId> all(static_cast<std::size_t>(g.edge_count()));
  std::iota(all.begin(), all.end(), 0);
  Compact out{edge_subgraph(g, all), {}};
  std::vector<Vertex> xs;
  for (std::size_t v = 0; v < out.sub.parent_vertex.size(); ++v) {
    if (p.in_x[static_cast<std::size_t>(out.sub.parent_vertex[v])]) xs.push_back(static_cast<Vertex>(v));
  }
  out.partition = BipartitePartition(out.sub.graph.vertex_count(), std::move(xs));
  return out;
}

// Euler circuit of each component of an even-degree multigraph, as arc list.
std::vector<std::pair<Vertex, Vertex>> euler_orientation(const Graph& h) {
  std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
  std::vector<std::size_t> next(static_cast<std::size_t>(h.vertex_count()), 0);
  std::vector<std::pair<Vertex, Vertex>> arcs(static_cast<std::size_t>(h.edge_count()));
  for (Vertex start = 0; start < h.vertex_count(); ++start) {
    // Hierholzer: orient each edge in the direction it is first traversed.
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto& i = next[static_cast<std::size_t>(v)];
      const auto inc = h.incident(v);
      while (i < inc.size() && used[static_cast<std::size_t>(inc[i].edge)]) ++i;
      if (i == inc.size()) {
        stack.pop_back();
        continue;
      }
      const Incidence step = inc[i];
      used[static_cast<std::size_t>(step.edge)] = 1;
      arcs[static_cast<std::size_t>(step.edge)] = {v, step.neighbor};
      stack.push_back(step.neighbor);
    }
  }
  return arcs;
}

// The (2,b)-biregular supergraph keeps the original edge ids as a prefix.
struct Stub {
  Vertex y;
  std::int32_t missing;
};

std::int32_t ceil_half(std::int32_t v) { return (v + 1) / 2; }

// Colors of edges within distance 1 of e among active colored edges (e excluded).
std::vector<char> nearby_colors(const Graph& g, const EdgeColoring& c, const std::vector<char>& active, EdgeId e,
                                Color palette) {
  std::vector<char> seen(static_cast<std::size_t>(palette) + 1, 0);
  auto mark = [&](EdgeId f) {
    if (f != e && active[static_cast<std::size_t>(f)] && c.is_colored(f) && c[f] <= palette) {
      seen[static_cast<std::size_t>(c[f])] = 1;
    }
  };
  for (Vertex end : {g.edge(e).u, g.edge(e).v}) {
    for (const Incidence& inc : g.incident(end)) {
      if (inc.edge == e || !active[static_cast<std::size_t>(inc.edge)]) continue;
      mark(inc.edge);
      for (const Incidence& far : g.incident(inc.neighbor)) {
        if (active[static_cast<std::size_t>(far.edge)]) mark(far.edge);
      }
    }
  }
  return seen;
}

Color smallest_free(const std::vector<char>& seen, Color palette) {
  for (Color a = 1; a <= palette; ++a) {
    if (!seen[static_cast<std::size_t>(a)]) return a;
  }
  throw Error(ErrorCode::InternalCaseExhaustion, "no free color among " + std::to_string(palette));
}

// Recursive reduction for max X-degree 2, max Y-degree 3 on the active edges.
class Reducer23 {
 public:
  Reducer23(const Graph& g, const BipartitePartition& p)
      : g_(g), p_(p), active_(static_cast<std::size_t>(g.edge_count()), 1),
        degree_(static_cast<std::size_t>(g.vertex_count()), 0), color_(g.edge_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree_[static_cast<std::size_t>(v)] = g.degree(v);
    remaining_ = g.edge_count();
  }

  EdgeColoring run() {
    solve();
    return color_;
  }

 private:
  static constexpr Color kPalette = 5;

  void remove(EdgeId e) {
    active_[static_cast<std::size_t>(e)] = 0;
    --degree_[static_cast<std::size_t>(g_.edge(e).u)];
    --degree_[static_cast<std::size_t>(g_.edge(e).v)];
    --remaining_;
  }

  void restore(EdgeId e) {
    active_[static_cast<std::size_t>(e)] = 1;
    ++degree_[static_cast<std::size_t>(g_.edge(e).u)];
    ++degree_[static_cast<std::size_t>(g_.edge(e).v)];
    ++remaining_;
  }

  std::int32_t deg(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }

  EdgeId other_active(Vertex v, EdgeId except) const {
    for (const Incidence& inc : g_.incident(v)) {
      if (inc.edge != except && active_[static_cast<std::size_t>(inc.edge)]) return inc.edge;
    }
    return -1;
  }

  void solve() {
    if (remaining_ == 0) return;
    // Pendant edge.
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (!active_[static_cast<std::size_t>(e)]) continue;
      if (deg(g_.edge(e).u) == 1 || deg(g_.edge(e).v) == 1) {
        remove(e);
        solve();
        restore(e);
        color_.set(e, smallest_free(nearby_colors(g_, color_, active_, e, kPalette), kPalette));
        return;
      }
    }
    // Three consecutive degree-2 vertices u1 u2 u3.
    for (Vertex u2 = 0; u2 < g_.vertex_count(); ++u2) {
      if (deg(u2) != 2) continue;
      const EdgeId a = other_active(u2, -1);
      const EdgeId b = other_active(u2, a);
      const Vertex u1 = g_.edge(a).other(u2);
      const Vertex u3 = g_.edge(b).other(u2);
      if (deg(u1) != 2 || deg(u3) != 2) continue;
      remove(a);
      remove(b);
      solve();
      restore(a);
      restore(b);
      color_.clear(a);
      color_.clear(b);
      color_.set(a, smallest_free(nearby_colors(g_, color_, active_, a, kPalette), kPalette));
      remove(a);
      auto seen = nearby_colors(g_, color_, active_, b, kPalette);
      restore(a);
      seen[static_cast<std::size_t>(color_[a])] = 1;
      color_.set(b, smallest_free(seen, kPalette));
      return;
    }
    remove_shortest_cycle();
  }

  void remove_shortest_cycle() {
    std::vector<bool> mask(active_.begin(), active_.end());
    const std::vector<EdgeId> cycle = shortest_cycle(g_, mask);
    if (cycle.empty()) throw Error(ErrorCode::InternalCaseExhaustion, "no reduction applies to an acyclic remainder");
    for (EdgeId e : cycle) remove(e);
    solve();

    // Pendant edges of H = current graph minus the cycle, recolored one at a time.
    std::vector<Vertex> cycle_vertices;
    for (EdgeId e : cycle) {
      cycle_vertices.push_back(g_.edge(e).u);
      cycle_vertices.push_back(g_.edge(e).v);
    }
    std::sort(cycle_vertices.begin(), cycle_vertices.end());
    cycle_vertices.erase(std::unique(cycle_vertices.begin(), cycle_vertices.end()), cycle_vertices.end());
    std::vector<EdgeId> pendant_at(static_cast<std::size_t>(g_.vertex_count()), -1);
    for (Vertex v : cycle_vertices) {
      if (deg(v) != 1) continue;
      const EdgeId e = other_active(v, -1);
      pendant_at[static_cast<std::size_t>(v)] = e;
      color_.clear(e);
      color_.set(e, smallest_free(nearby_colors(g_, color_, active_, e, kPalette), kPalette));
    }

    // Lists: drop the colors of the pendant edge at the Y end and at the other
    // Y vertex next to the X end.
    const auto n = cycle.size();
    std::vector<std::vector<Color>> lists(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Edge& ed = g_.edge(cycle[i]);
      const Vertex y = p_.in_x[static_cast<std::size_t>(ed.u)] ? ed.v : ed.u;
      const Vertex x = ed.other(y);
      const EdgeId neighbour_edge = g_.edge(cycle[(i + 1) % n]).u == x || g_.edge(cycle[(i + 1) % n]).v == x
                                        ? cycle[(i + 1) % n]
                                        : cycle[(i + n - 1) % n];
      const Vertex y2 = g_.edge(neighbour_edge).other(x);
      std::vector<char> banned(kPalette + 1, 0);
      for (Vertex w : {y, y2}) {
        const EdgeId pe = pendant_at[static_cast<std::size_t>(w)];
        if (pe >= 0) banned[static_cast<std::size_t>(color_[pe])] = 1;
      }
      for (Color a = 1; a <= kPalette; ++a) {
        if (!banned[static_cast<std::size_t>(a)]) lists[i].push_back(a);
      }
    }
    const auto colors = list_star_color_cycle(lists);
    if (!colors) throw Error(ErrorCode::InternalCaseExhaustion, "cycle list coloring failed");
    for (std::size_t i = 0; i < n; ++i) {
      restore(cycle[i]);
      color_.set(cycle[i], (*colors)[i]);
    }
  }

  const Graph& g_;
  const BipartitePartition& p_;
  std::vector<char> active_;
  std::vector<std::int32_t> degree_;
  EdgeColoring color_;
  std::int32_t remaining_ = 0;
};

// Two-factor peeling for (2,2k+1)-biregular graphs; k = 1 is handled by Reducer23.
EdgeColoring peel_odd(const Graph& g, const BipartitePartition& p, std::int32_t k) {
  if (g.edge_count() == 0) return EdgeColoring(0);
  if (k <= 1) return color_2_3(g, p);
  const BiregularEmbedding s = embed_biregular(g, p, 2 * k + 1);
  const CondensedGraph h = condense(s.graph, s.partition);
  const auto factor = find_two_factor(h.graph);
  if (!factor) throw Error(ErrorCode::NoTwoFactorFound, "condensed graph has no 2-factor");

  std::vector<char> in_factor(static_cast<std::size_t>(s.graph.edge_count()), 0);
  std::vector<EdgeId> f_edges;
  for (EdgeId he : *factor) {
    const auto [a, b] = h.original_edges[static_cast<std::size_t>(he)];
    for (EdgeId e : {a, b}) {
      in_factor[static_cast<std::size_t>(e)] = 1;
      f_edges.push_back(e);
    }
  }
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < s.graph.edge_count(); ++e) {
    if (!in_factor[static_cast<std::size_t>(e)]) rest.push_back(e);
  }
  const EdgeColoring top = star3_color_even_cycle_family(s.graph, f_edges);
  const EdgeSubgraph sub = edge_subgraph(s.graph, rest);
  std::vector<Vertex> xs;
  for (std::size_t v = 0; v < sub.parent_vertex.size(); ++v) {
    if (s.partition.in_x[static_cast<std::size_t>(sub.parent_vertex[v])]) xs.push_back(static_cast<Vertex>(v));
  }
  const EdgeColoring below = peel_odd(sub.graph, BipartitePartition(sub.graph.vertex_count(), std::move(xs)), k - 1);

  EdgeColoring out(g.edge_count());
  const Color offset = 3 * (k - 1) + 2;
  for (EdgeId e : f_edges) {
    if (e < g.edge_count()) out.set(e, top[e] + offset);
  }
  for (std::size_t i = 0; i < sub.parent_edge.size(); ++i) {
    const EdgeId e = sub.parent_edge[i];
    if (e < g.edge_count()) out.set(e, below[static_cast<EdgeId>(i)]);
  }
  return out;
}

}  // namespace

BiregularEmbedding embed_biregular(const Graph& g, const BipartitePartition& p, std::int32_t b) {
  p.validate(g);
  if (b < 2) throw Error(ErrorCode::InvalidArgument, "target Y-degree must be at least 2");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<bool> in_x = p.in_x;
  std::vector<std::int32_t> degree(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    degree[static_cast<std::size_t>(v)] = g.degree(v);
    const bool x = in_x[static_cast<std::size_t>(v)];
    if (x && (g.degree(v) > 2 || g.degree(v) == 0)) {
      throw Error(ErrorCode::DegreeViolation, "X vertex " + std::to_string(v) + " must have degree 1 or 2");
    }
    if (!x && g.degree(v) > b) throw Error(ErrorCode::DegreeViolation, "Y vertex exceeds the target degree");
  }
  auto add_vertex = [&](bool x) {
    in_x.push_back(x);
    degree.push_back(0);
    return static_cast<Vertex>(in_x.size() - 1);
  };
  auto add_edge = [&](Vertex u, Vertex v) {
    edges.push_back({u, v});
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  };
  auto missing = [&](Vertex y) { return b - degree[static_cast<std::size_t>(y)]; };

  // Degree-1 X vertices take the Y vertex with the largest deficiency other than their neighbour.
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (!in_x[static_cast<std::size_t>(x)] || g.degree(x) != 1) continue;
    const Vertex taken = g.incident(x)[0].neighbor;
    Vertex best = -1;
    for (Vertex y = 0; y < static_cast<Vertex>(in_x.size()); ++y) {
      if (in_x[static_cast<std::size_t>(y)] || y == taken || missing(y) <= 0) continue;
      if (best == -1 || missing(y) > missing(best)) best = y;
    }
    if (best == -1) best = add_vertex(false);
    add_edge(x, best);
  }

  // Remaining Y deficiencies are paired by new X vertices.
  auto stubs = [&] {
    std::vector<Stub> out;
    for (Vertex y = 0; y < static_cast<Vertex>(in_x.size()); ++y) {
      if (!in_x[static_cast<std::size_t>(y)] && missing(y) > 0) out.push_back({y, missing(y)});
    }
    return out;
  };
  while (true) {
    auto s = stubs();
    std::int64_t total = 0;
    std::int32_t top = 0;
    for (const Stub& st : s) {
      total += st.missing;
      top = std::max(top, st.missing);
    }
    if (total % 2 == 0 && 2 * top <= total) break;
    add_vertex(false);
  }
  while (true) {
    auto s = stubs();
    if (s.empty()) break;
    std::stable_sort(s.begin(), s.end(), [](const Stub& a, const Stub& b2) { return a.missing > b2.missing; });
    const Vertex x = add_vertex(true);
    add_edge(x, s[0].y);
    add_edge(x, s[1].y);
  }

  BiregularEmbedding out;
  const auto n = static_cast<std::int32_t>(in_x.size());
  out.graph = Graph(n, std::move(edges));
  std::vector<Vertex> xs;
  for (Vertex v = 0; v < n; ++v) {
    if (in_x[static_cast<std::size_t>(v)]) xs.push_back(v);
  }
  out.partition = BipartitePartition(n, std::move(xs));
  return out;
}

std::vector<std::vector<EdgeId>> two_factorize_even_regular(const Graph& h) {
  const std::int32_t d = h.vertex_count() == 0 ? 0 : h.max_degree();
  if (h.vertex_count() == 0 || d == 0 || d % 2 != 0 || h.min_degree() != d) {
    throw Error(ErrorCode::NotEvenRegular, "graph is not 2k-regular with k >= 1");
  }
  const auto arcs = euler_orientation(h);
  const std::int32_t n = h.vertex_count();
  // Arc (u,v) becomes edge out_u -- in_v in a k-regular bipartite graph.
  std::vector<Edge> split;
  for (const auto& [u, v] : arcs) split.push_back({u, n + v});
  std::vector<char> taken(split.size(), 0);
  std::vector<std::vector<EdgeId>> factors;
  for (std::int32_t round = 0; round < d / 2; ++round) {
    std::vector<Edge> live;
    std::vector<EdgeId> origin;
    for (std::size_t e = 0; e < split.size(); ++e) {
      if (taken[e]) continue;
      live.push_back(split[e]);
      origin.push_back(static_cast<EdgeId>(e));
    }
    const auto matching = find_perfect_matching(Graph(2 * n, std::move(live)));
    if (!matching) throw Error(ErrorCode::InternalCaseExhaustion, "regular bipartite graph without perfect matching");
    std::vector<EdgeId> factor;
    for (EdgeId e : *matching) {
      const EdgeId original = origin[static_cast<std::size_t>(e)];
      taken[static_cast<std::size_t>(original)] = 1;
      factor.push_back(original);
    }
    std::sort(factor.begin(), factor.end());
    factors.push_back(std::move(factor));
  }
  return factors;
}

std::optional<std::vector<EdgeId>> find_two_factor(const Graph& h) {
  // Vertex v with degree d gets d outer vertices (one per incident edge) and
  // d-2 inner vertices joined to all of them; edge uv joins the two outer copies.
  std::vector<Edge> gadget;
  std::int32_t next = 0;
  std::vector<std::vector<Vertex>> outer(static_cast<std::size_t>(h.vertex_count()));
  std::vector<std::pair<Vertex, Vertex>> ends(static_cast<std::size_t>(h.edge_count()), {-1, -1});
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    const std::int32_t d = h.degree(v);
    if (d < 2) return std::nullopt;
    for (const Incidence& inc : h.incident(v)) {
      const Vertex o = next++;
      outer[static_cast<std::size_t>(v)].push_back(o);
      auto& slot = ends[static_cast<std::size_t>(inc.edge)];
      (slot.first == -1 ? slot.first : slot.second) = o;
    }
    for (std::int32_t i = 0; i < d - 2; ++i) {
      const Vertex inner = next++;
      for (Vertex o : outer[static_cast<std::size_t>(v)]) gadget.push_back({inner, o});
    }
  }
  const auto first_edge_link = static_cast<EdgeId>(gadget.size());
  for (const auto& [a, b] : ends) gadget.push_back({a, b});
  const auto matching = find_perfect_matching(Graph(next, std::move(gadget)));
  if (!matching) return std::nullopt;
  std::vector<EdgeId> factor;
  for (EdgeId e : *matching) {
    if (e >= first_edge_link) factor.push_back(e - first_edge_link);
  }
  std::sort(factor.begin(), factor.end());
  return factor;
}

Factorization decompose_2_2k(const Graph& g, const BipartitePartition& p) {
  p.validate(g);
  std::int32_t b = -1;
  for (Vertex y : p.part_y) {
    if (b == -1) b = g.degree(y);
    if (g.degree(y) != b) throw Error(ErrorCode::NotBiregular, "Y vertices have different degrees");
  }
  if (b < 2 || b % 2 != 0) throw Error(ErrorCode::NotBiregular, "Y-degree must be even and positive");
  const CondensedGraph h = condense(g, p);
  Factorization out;
  for (const auto& hf : two_factorize_even_regular(h.graph)) {
    std::vector<EdgeId> f;
    for (EdgeId he : hf) {
      f.push_back(h.original_edges[static_cast<std::size_t>(he)].first);
      f.push_back(h.original_edges[static_cast<std::size_t>(he)].second);
    }
    std::sort(f.begin(), f.end());
    out.factors.push_back(std::move(f));
  }
  return out;
}

std::vector<Color> star3_cycle_pattern(std::size_t length) {
  if (length < 2 || length == 5) {
    throw Error(ErrorCode::InvalidArgument, "no star 3-coloring pattern for a cycle of length " + std::to_string(length));
  }
  if (length == 2) return {1, 2};
  // One or two 1,2,1,3 blocks (by length mod 3), then 1,2,3 blocks.
  std::vector<Color> pattern;
  for (std::size_t q = 0; q < length % 3; ++q) pattern.insert(pattern.end(), {1, 2, 1, 3});
  while (pattern.size() < length) pattern.insert(pattern.end(), {1, 2, 3});
  return pattern;
}

EdgeColoring star3_color_even_cycle_family(const Graph& g, std::span<const EdgeId> edges) {
  const EdgeSubgraph sub = edge_subgraph(g, edges);
  const Graph& f = sub.graph;
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (f.degree(v) != 2) throw Error(ErrorCode::NotCycleFamily, "edge set is not a union of disjoint cycles");
  }
  EdgeColoring out(g.edge_count());
  std::vector<char> done(static_cast<std::size_t>(f.edge_count()), 0);
  for (EdgeId start = 0; start < f.edge_count(); ++start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    std::vector<EdgeId> cycle{start};
    done[static_cast<std::size_t>(start)] = 1;
    Vertex at = f.edge(start).v;
    EdgeId cur = start;
    while (true) {
      const auto inc = f.incident(at);
      const EdgeId nxt = inc[0].edge == cur ? inc[1].edge : inc[0].edge;
      if (nxt == start) break;
      cycle.push_back(nxt);
      done[static_cast<std::size_t>(nxt)] = 1;
      at = f.edge(nxt).other(at);
      cur = nxt;
    }
    const auto len = cycle.size();
    if (len % 2 != 0) throw Error(ErrorCode::OddCycle, "cycle of odd length " + std::to_string(len));
    const std::vector<Color> pattern = star3_cycle_pattern(len);
    for (std::size_t i = 0; i < len; ++i) {
      out.set(sub.parent_edge[static_cast<std::size_t>(cycle[i])], pattern[i]);
    }
  }
  return out;
}

std::optional<std::vector<Color>> list_star_color_cycle(std::span<const std::vector<Color>> lists) {
  const auto n = lists.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least 2 edges");
  for (const auto& l : lists) {
    if (l.size() < 3) throw Error(ErrorCode::ListTooSmall, "every list needs at least 3 colors");
  }
  std::vector<Color> c(n, 0);
  // Constraint checks that become decidable once position i is assigned.
  auto ok = [&](std::size_t i) {
    if (i > 0 && c[i] == c[i - 1]) return false;
    if (i == n - 1 && c[i] == c[0]) return false;
    if (n < 4) return true;
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t idx[4] = {s, (s + 1) % n, (s + 2) % n, (s + 3) % n};
      bool involves = false;
      bool ready = true;
      for (std::size_t j : idx) {
        involves = involves || j == i;
        ready = ready && j <= i;
      }
      if (involves && ready && c[idx[0]] == c[idx[2]] && c[idx[1]] == c[idx[3]]) return false;
    }
    return true;
  };
  std::vector<std::size_t> choice(n, 0);
  std::size_t i = 0;
  while (true) {
    if (choice[i] == lists[i].size()) {
      choice[i] = 0;
      c[i] = 0;
      if (i == 0) return std::nullopt;
      --i;
      ++choice[i];
      continue;
    }
    c[i] = lists[i][choice[i]];
    if (!ok(i)) {
      ++choice[i];
      continue;
    }
    if (i + 1 == n) return c;
    ++i;
  }
}

EdgeColoring color_2_even(const Graph& g, const BipartitePartition& p, std::int32_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  require_degrees(g, p, 2 * k);
  if (g.edge_count() == 0) return EdgeColoring(0);
  const Compact c = compact(g, p);
  const std::int32_t used_k = std::max(1, ceil_half(c.partition.max_degree_y(c.sub.graph)));
  const BiregularEmbedding s = embed_biregular(c.sub.graph, c.partition, 2 * used_k);
  const Factorization fz = decompose_2_2k(s.graph, s.partition);
  EdgeColoring out(g.edge_count());
  for (std::size_t i = 0; i < fz.factors.size(); ++i) {
    const EdgeColoring part = star3_color_even_cycle_family(s.graph, fz.factors[i]);
    for (EdgeId e : fz.factors[i]) {
      if (e < g.edge_count()) out.set(e, part[e] + 3 * static_cast<Color>(i));
    }
  }
  require_star(g, out, "color_2_even");
  return out;
}

EdgeColoring color_2_3(const Graph& g, const BipartitePartition& p) {
  require_degrees(g, p, 3);
  const EdgeColoring out = Reducer23(g, p).run();
  require_star(g, out, "color_2_3");
  return out;
}

EdgeColoring color_2_odd(const Graph& g, const BipartitePartition& p, std::int32_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be nonnegative");
  require_degrees(g, p, 2 * k + 1);
  if (g.edge_count() == 0) return EdgeColoring(0);
  const Compact c = compact(g, p);
  const std::int32_t dy = c.partition.max_degree_y(c.sub.graph);
  if (dy <= 1) {
    // Components are paths with at most two edges.
    EdgeColoring out(g.edge_count());
    for (Vertex x : c.partition.part_x) {
      Color next = 1;
      for (const Incidence& inc : c.sub.graph.incident(x)) out.set(inc.edge, next++);
    }
    return out;
  }
  const std::int32_t used_k = std::max(1, dy / 2);
  EdgeColoring out;
  try {
    out = peel_odd(c.sub.graph, c.partition, used_k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoTwoFactorFound) throw;
    SearchConfig cfg;
    cfg.time_budget = std::chrono::seconds(30);
    const SearchOutcome o = find_star_coloring(g, 3 * used_k + 2, cfg);
    if (o.status != SearchStatus::Colored) throw;
    return *o.coloring;
  }
  require_star(g, out, "color_2_odd");
  return out;
}

ColoredGraph example_2_3_four_colors() {
  // u1 u3 u5 v1 v3 v5 = 0..5 (degree 2), u2 u4 v2 v4 = 6..9 (degree 3).
  enum : Vertex { u1, u3, u5, v1, v3, v5, u2, u4, v2, v4 };
  std::vector<Edge> edges{
      {u1, u2}, {u2, u3}, {u3, u4}, {u4, u5},  // first P_5
      {v1, v2}, {v2, v3}, {v3, v4}, {v4, v5},  // second P_5
      {u1, v2}, {u5, v4}, {u2, v1}, {u4, v5},  // cross edges
  };
  ColoredGraph out;
  out.graph = Graph(10, std::move(edges));
  out.partition = BipartitePartition::prefix(10, 6);
  out.coloring = EdgeColoring(std::vector<Color>{3, 2, 3, 1, 1, 2, 3, 2, 4, 4, 4, 4});
  return out;
}

}  // namespace starec
