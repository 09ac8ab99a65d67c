#pragma once

// Slow reference implementations used to cross-check the library. They share
// no code with src/ beyond the Graph and EdgeColoring containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "starec/coloring.hpp"
#include "starec/graph.hpp"

namespace starec::oracle {

inline bool share_endpoint(const Edge& a, const Edge& b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

inline bool is_proper(const Graph& g, const std::vector<Color>& c) {
  for (EdgeId a = 0; a < g.edge_count(); ++a) {
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      if (c[a] == c[b] && share_endpoint(g.edge(a), g.edge(b))) return false;
    }
  }
  return true;
}

/// Every walk v0 e1 v1 e2 v2 e3 v3 e4 v4 with distinct edges, v0..v3 distinct
/// and v4 either new or equal to v0, is a path or cycle on four edges.
/// Calls fn(e1, e2, e3, e4) for each (each one is seen several times).
inline void for_each_four_edge_path_or_cycle(const Graph& g,
                                             const std::function<void(EdgeId, EdgeId, EdgeId, EdgeId)>& fn) {
  const std::int32_t m = g.edge_count();
  for (EdgeId e1 = 0; e1 < m; ++e1) {
    for (int flip = 0; flip < 2; ++flip) {
      const Vertex v0 = flip ? g.edge(e1).v : g.edge(e1).u;
      const Vertex v1 = g.edge(e1).other(v0);
      for (EdgeId e2 = 0; e2 < m; ++e2) {
        if (e2 == e1) continue;
        const Edge& f2 = g.edge(e2);
        if (f2.u != v1 && f2.v != v1) continue;
        const Vertex v2 = f2.other(v1);
        if (v2 == v0 || v2 == v1) continue;
        for (EdgeId e3 = 0; e3 < m; ++e3) {
          if (e3 == e1 || e3 == e2) continue;
          const Edge& f3 = g.edge(e3);
          if (f3.u != v2 && f3.v != v2) continue;
          const Vertex v3 = f3.other(v2);
          if (v3 == v0 || v3 == v1 || v3 == v2) continue;
          for (EdgeId e4 = 0; e4 < m; ++e4) {
            if (e4 == e1 || e4 == e2 || e4 == e3) continue;
            const Edge& f4 = g.edge(e4);
            if (f4.u != v3 && f4.v != v3) continue;
            const Vertex v4 = f4.other(v3);
            if (v4 == v1 || v4 == v2 || v4 == v3) continue;
            fn(e1, e2, e3, e4);
          }
        }
      }
    }
  }
}

inline bool has_bicolored_four(const Graph& g, const std::vector<Color>& c) {
  bool found = false;
  for_each_four_edge_path_or_cycle(g, [&](EdgeId a, EdgeId b, EdgeId x, EdgeId y) {
    if (c[a] == c[x] && c[b] == c[y] && c[a] != c[b]) found = true;
  });
  return found;
}

inline bool is_star(const Graph& g, const std::vector<Color>& c) { return is_proper(g, c) && !has_bicolored_four(g, c); }

/// Minimum number of blocks over all partitions of E(g) that are star
/// colorings. Enumerates restricted growth strings, so it is exact.
inline std::int32_t naive_chi_star(const Graph& g) {
  const std::int32_t m = g.edge_count();
  if (m == 0) return 0;
  std::vector<Color> c(static_cast<std::size_t>(m), 1);
  std::int32_t best = m;
  std::function<void(EdgeId, Color)> rec = [&](EdgeId e, Color used) {
    if (used >= best) return;
    if (e == m) {
      if (is_star(g, c)) best = used;
      return;
    }
    for (Color k = 1; k <= used + 1; ++k) {
      c[static_cast<std::size_t>(e)] = k;
      rec(e + 1, std::max(used, k));
    }
  };
  c[0] = 1;
  rec(1, 1);
  return best;
}

}  // namespace starec::oracle
