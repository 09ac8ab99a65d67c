#include "starec/cubic.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "starec/bireg.hpp"
#include "starec/error.hpp"
#include "starec/search.hpp"
#include "starec/verify.hpp"

namespace starec {

std::string_view to_string(HalinSubcase s) {
  switch (s) {
    case HalinSubcase::Case1_1: return "1.1";
    case HalinSubcase::Case1_2_1: return "1.2.1";
    case HalinSubcase::Case1_2_2: return "1.2.2";
    case HalinSubcase::Case1_3: return "1.3";
    case HalinSubcase::Case2_1_1: return "2.1.1";
    case HalinSubcase::Case2_1_2: return "2.1.2";
    case HalinSubcase::Case2_1_3: return "2.1.3";
    case HalinSubcase::Case2_2: return "2.2";
  }
  return "?";
}

namespace {

constexpr Color kColors = 6;
using Assignment = std::vector<std::pair<EdgeId, Color>>;

std::vector<Color> palette_minus(std::initializer_list<Color> banned) {
  std::vector<Color> out;
  for (Color a = 1; a <= kColors; ++a) {
    if (std::find(banned.begin(), banned.end(), a) == banned.end()) out.push_back(a);
  }
  return out;
}

std::vector<Color> palette_minus(const std::vector<Color>& banned) {
  std::vector<Color> out;
  for (Color a = 1; a <= kColors; ++a) {
    if (std::find(banned.begin(), banned.end(), a) == banned.end()) out.push_back(a);
  }
  return out;
}

bool contains(std::initializer_list<Color> set, Color a) {
  return std::find(set.begin(), set.end(), a) != set.end();
}

EdgeId edge_between(const Graph& g, Vertex a, Vertex b) {
  for (const Incidence& inc : g.incident(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return -1;
}

EdgeId require_edge(const Graph& g, Vertex a, Vertex b) {
  const EdgeId e = edge_between(g, a, b);
  if (e < 0) throw Error(ErrorCode::InternalCaseExhaustion, "reduction frame is missing an edge");
  return e;
}

// Vertex labels of the reduction frame; y3 == u in the second case.
struct Frame {
  bool case1 = true;
  bool mirrored = false;
  Vertex w = -1, u = -1, v = -1, v1 = -1, v2 = -1, x1 = -1, y1 = -1, y2 = -1, y3 = -1, z = -1;
  std::int32_t dir = 1;
};

class HalinColorer {
 public:
  explicit HalinColorer(HalinStats& stats) : stats_(stats) {}

  EdgeColoring color(const HalinGraph& h) {
    if (h.cycle_length() <= 5) return base(h);
    const Graph& g = h.graph;
    const Frame f = find_frame(h);
    if (f.mirrored) ++stats_.mirrored;

    // G': drop the frame's interior and make u a cycle vertex between x1 and z (or y2).
    const Vertex far = f.case1 ? f.z : f.y2;
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
    for (Vertex r : {f.v, f.v1, f.v2, f.y1}) removed[static_cast<std::size_t>(r)] = true;
    if (f.case1) {
      removed[static_cast<std::size_t>(f.y2)] = true;
      removed[static_cast<std::size_t>(f.y3)] = true;
    }
    std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> parent;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (removed[static_cast<std::size_t>(x)]) continue;
      local[static_cast<std::size_t>(x)] = static_cast<Vertex>(parent.size());
      parent.push_back(x);
    }
    std::vector<Edge> tree;
    for (EdgeId e : h.tree_edges) {
      const Edge& ed = g.edge(e);
      if (!removed[static_cast<std::size_t>(ed.u)] && !removed[static_cast<std::size_t>(ed.v)]) {
        tree.push_back({local[static_cast<std::size_t>(ed.u)], local[static_cast<std::size_t>(ed.v)]});
      }
    }
    std::vector<Vertex> order{local[static_cast<std::size_t>(f.x1)], local[static_cast<std::size_t>(f.u)]};
    for (Vertex c = far; c != f.x1; c = step(h, c, f.dir)) order.push_back(local[static_cast<std::size_t>(c)]);
    const HalinGraph reduced = build_halin(tree, order);

    const EdgeColoring sub = color(reduced);

    // Palette permutation with uw -> 1, ux1 -> 2, u far -> 3.
    const Graph& rg = reduced.graph;
    const Vertex lu = local[static_cast<std::size_t>(f.u)];
    const Color cw = sub[require_edge(rg, lu, local[static_cast<std::size_t>(f.w)])];
    const Color cx = sub[require_edge(rg, lu, local[static_cast<std::size_t>(f.x1)])];
    const Color cz = sub[require_edge(rg, lu, local[static_cast<std::size_t>(far)])];
    std::vector<Color> perm(kColors + 1, 0);
    perm[static_cast<std::size_t>(cw)] = 1;
    perm[static_cast<std::size_t>(cx)] = 2;
    perm[static_cast<std::size_t>(cz)] = 3;
    Color next = 4;
    for (Color a = 1; a <= kColors; ++a) {
      if (perm[static_cast<std::size_t>(a)] == 0) perm[static_cast<std::size_t>(a)] = next++;
    }

    EdgeColoring out(g.edge_count());
    for (EdgeId e = 0; e < rg.edge_count(); ++e) {
      const Vertex a = parent[static_cast<std::size_t>(rg.edge(e).u)];
      const Vertex b = parent[static_cast<std::size_t>(rg.edge(e).v)];
      const EdgeId original = edge_between(g, a, b);
      if (original >= 0) out.set(original, perm[static_cast<std::size_t>(sub[e])]);
    }
    extend(g, f, out);
    return out;
  }

 private:
  static Vertex step(const HalinGraph& h, Vertex leaf, std::int32_t dir) {
    const auto m = h.cycle_length();
    const auto& order = h.cycle_order;
    const auto it = std::find(order.begin(), order.end(), leaf);
    const auto i = static_cast<std::int32_t>(it - order.begin());
    return order[static_cast<std::size_t>(((i + dir) % m + m) % m)];
  }

  EdgeColoring base(const HalinGraph& h) {
    ++stats_.base_cases;
    SearchConfig cfg;
    cfg.max_colors = kColors;
    const ChiResult r = chi_star(h.graph, cfg);
    if (r.status != SearchStatus::Colored) {
      throw Error(ErrorCode::InternalCaseExhaustion, "no star 6-coloring found for a small Halin graph");
    }
    return r.witness;
  }

  Frame find_frame(const HalinGraph& h) const {
    const Graph& g = h.graph;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<Vertex>> tree(n);
    for (EdgeId e : h.tree_edges) {
      tree[static_cast<std::size_t>(g.edge(e).u)].push_back(g.edge(e).v);
      tree[static_cast<std::size_t>(g.edge(e).v)].push_back(g.edge(e).u);
    }
    auto bfs = [&](Vertex s, std::vector<Vertex>& par) {
      std::vector<std::int32_t> dist(n, -1);
      par.assign(n, -1);
      std::deque<Vertex> q{s};
      dist[static_cast<std::size_t>(s)] = 0;
      Vertex last = s;
      while (!q.empty()) {
        const Vertex x = q.front();
        q.pop_front();
        last = x;
        for (Vertex y : tree[static_cast<std::size_t>(x)]) {
          if (dist[static_cast<std::size_t>(y)] >= 0) continue;
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          par[static_cast<std::size_t>(y)] = x;
          q.push_back(y);
        }
      }
      return last;
    };
    std::vector<Vertex> par;
    const Vertex a = bfs(0, par);
    const Vertex b = bfs(a, par);
    // Longest tree path b = u0, u1, u2, u3, ...
    Frame f;
    f.v = par[static_cast<std::size_t>(b)];
    f.u = par[static_cast<std::size_t>(f.v)];
    f.w = par[static_cast<std::size_t>(f.u)];
    if (f.w < 0) throw Error(ErrorCode::InternalCaseExhaustion, "tree path too short for a reduction");
    std::vector<Vertex> leaves;
    for (Vertex x : tree[static_cast<std::size_t>(f.v)]) {
      if (x != f.u) leaves.push_back(x);
    }
    Vertex q = -1;
    for (Vertex x : tree[static_cast<std::size_t>(f.u)]) {
      if (x != f.v && x != f.w) q = x;
    }
    auto tree_adjacent = [&](Vertex x, Vertex y) {
      const auto& nb = tree[static_cast<std::size_t>(x)];
      return std::find(nb.begin(), nb.end(), y) != nb.end();
    };
    auto reaches_q = [&](Vertex leaf) { return leaf == q || tree_adjacent(q, leaf); };

    f.dir = step(h, leaves[0], 1) == leaves[1] ? 1 : -1;
    f.v1 = leaves[0];
    f.v2 = leaves[1];
    if (!reaches_q(step(h, f.v2, f.dir))) {
      // The short path from u ends next to v1: relabel so it ends at y1.
      f.mirrored = true;
      f.dir = -f.dir;
      std::swap(f.v1, f.v2);
    }
    f.x1 = step(h, f.v1, -f.dir);
    f.y1 = step(h, f.v2, f.dir);
    if (!reaches_q(f.y1)) throw Error(ErrorCode::InternalCaseExhaustion, "no short path from u to the cycle");
    f.y2 = step(h, f.y1, f.dir);
    f.case1 = q != f.y1;
    if (f.case1) {
      f.y3 = q;
      if (!tree_adjacent(f.y3, f.y2)) throw Error(ErrorCode::InternalCaseExhaustion, "y2 is not a child of y3");
      f.z = step(h, f.y2, f.dir);
    } else {
      f.y3 = f.u;
    }
    return f;
  }

  // Two colors at vertex x other than the edge to `except`.
  static std::pair<Color, Color> others_at(const Graph& g, const EdgeColoring& c, Vertex x, Vertex except) {
    std::vector<Color> found;
    for (const Incidence& inc : g.incident(x)) {
      if (inc.neighbor != except) found.push_back(c[inc.edge]);
    }
    return {found.at(0), found.at(1)};
  }

  void extend(const Graph& g, const Frame& f, EdgeColoring& out) {
    const auto [sa, sb] = others_at(g, out, f.x1, f.v1);
    const Vertex tz = f.case1 ? f.z : f.y2;
    const auto [ta, tb] = others_at(g, out, tz, f.case1 ? f.y2 : f.y1);
    const std::pair<Color, Color> s_orders[2] = {{sa, sb}, {sb, sa}};
    const std::pair<Color, Color> t_orders[2] = {{ta, tb}, {tb, ta}};
    const std::vector<Color> missing = palette_minus({2, 3, sa, sb, ta, tb});

    const EdgeId x1v1 = require_edge(g, f.x1, f.v1);
    const EdgeId uv = require_edge(g, f.u, f.v);
    const EdgeId vv1 = require_edge(g, f.v, f.v1);
    const EdgeId vv2 = require_edge(g, f.v, f.v2);
    const EdgeId v1v2 = require_edge(g, f.v1, f.v2);
    const EdgeId v2y1 = require_edge(g, f.v2, f.y1);
    const EdgeId y1y2 = require_edge(g, f.y1, f.y2);

    HalinSubcase sub{};
    bool complementary = false;
    std::vector<Assignment> candidates;
    std::vector<EdgeId> fresh;
    if (f.case1) {
      const EdgeId y2z = require_edge(g, f.y2, f.z);
      const EdgeId uy3 = require_edge(g, f.u, f.y3);
      const EdgeId y1y3 = require_edge(g, f.y1, f.y3);
      const EdgeId y2y3 = require_edge(g, f.y2, f.y3);
      fresh = {x1v1, uv, y2z, uy3, vv1, vv2, v1v2, v2y1, y1y2, y1y3, y2y3};
      const Assignment fixed{{x1v1, 2}, {uv, 2}, {y2z, 3}, {uy3, 3}};
      auto push = [&](Assignment a) {
        a.insert(a.begin(), fixed.begin(), fixed.end());
        candidates.push_back(std::move(a));
      };
      if (missing.size() >= 2) {
        sub = HalinSubcase::Case1_1;
        for (Color c1 : missing) {
          for (Color c2 : missing) {
            if (c1 == c2 || c2 == 1) continue;
            const auto rest = palette_minus({2, 3, c1, c2});
            for (Color a : rest) {
              if (a == 1) continue;
              for (Color b : rest) {
                if (b == a) continue;
                push({{vv1, c2}, {y2y3, c2}, {v1v2, c1}, {y1y2, c1}, {vv2, a}, {y1y3, a}, {v2y1, b}});
              }
            }
          }
        }
      } else if (missing.size() == 1) {
        const Color c1 = missing[0];
        const bool disjoint = !contains({ta, tb}, sa) && !contains({ta, tb}, sb);
        if (disjoint) {
          sub = HalinSubcase::Case1_2_1;
          for (const auto& [s1, s2] : s_orders) {
            for (const auto& [t1, t2] : t_orders) {
              if (t1 != 2) continue;
              if (c1 == 1) {
                push({{v1v2, c1}, {y1y2, c1}, {vv1, t2}, {y1y3, t2}, {vv2, s1}, {y2y3, s1}, {v2y1, s2}});
              } else if (s1 != 1) {
                push({{vv1, c1}, {y2y3, c1}, {v1v2, 3}, {vv2, s1}, {y1y3, s1}, {v2y1, t2}, {y1y2, s2}});
              }
            }
          }
          if (candidates.empty()) {
            // 3 lies at x1 instead of 2 at z; the two sides are not symmetric.
            complementary = true;
            for (const auto& [s1, s2] : s_orders) {
              for (const auto& [t1, t2] : t_orders) {
                if (s1 != 3) continue;
                if (c1 == 1) {
                  push({{vv1, t1}, {y1y3, t1}, {vv2, 3}, {v1v2, c1}, {y1y2, c1}, {v2y1, t2}, {y2y3, s2}});
                } else if (t2 != 1) {
                  push({{vv1, c1}, {y2y3, c1}, {vv2, s2}, {v1v2, 3}, {v2y1, t1}, {y1y2, 2}, {y1y3, t2}});
                }
              }
            }
          }
        } else {
          sub = HalinSubcase::Case1_2_2;
          for (const auto& [s1, s2] : s_orders) {
            for (const auto& [t1, t2] : t_orders) {
              if (s1 != t1) continue;
              if (c1 == 1) {
                push({{v1v2, 1}, {y1y2, 1}, {vv1, t2}, {y1y3, t2}, {vv2, s2}, {y2y3, s2}, {v2y1, s1}});
                continue;
              }
              for (const auto& [a, b] : {std::pair{s2, t2}, std::pair{t2, s2}}) {
                if (a == 1) continue;
                push({{vv1, c1}, {y2y3, c1}, {v1v2, 3}, {y1y2, 2}, {vv2, a}, {y1y3, a}, {v2y1, b}});
              }
            }
          }
        }
      } else {
        sub = HalinSubcase::Case1_3;
        for (const auto& [s1, s2] : s_orders) {
          for (const auto& [t1, t2] : t_orders) {
            if (s1 != 1) continue;
            push({{vv1, t2}, {y1y3, t2}, {vv2, s2}, {y2y3, s2}, {v1v2, t1}, {y1y2, s1}, {v2y1, 3}});
          }
        }
        if (candidates.empty()) {
          // 1 lies at z rather than at x1.
          complementary = true;
          for (const auto& [s1, s2] : s_orders) {
            for (const auto& [t1, t2] : t_orders) {
              if (t1 != 1) continue;
              push({{vv1, t2}, {y1y3, t2}, {vv2, s1}, {y2y3, s2}, {v1v2, 3}, {v2y1, 1}, {y1y2, 2}});
            }
          }
        }
      }
    } else {
      const EdgeId uy1 = require_edge(g, f.u, f.y1);
      fresh = {x1v1, y1y2, uv, uy1, vv1, vv2, v1v2, v2y1};
      Assignment fixed{{x1v1, 2}, {y1y2, 3}};
      auto push = [&](const Assignment& extra, Assignment a) {
        a.insert(a.begin(), extra.begin(), extra.end());
        a.insert(a.begin(), fixed.begin(), fixed.end());
        candidates.push_back(std::move(a));
      };
      if (!contains({ta, tb}, 2)) {
        const Assignment extra{{uv, 3}, {uy1, 2}};
        if (missing.size() >= 2) {
          sub = HalinSubcase::Case2_1_1;
          for (Color c1 : missing) {
            for (Color c2 : missing) {
              if (c1 == c2 || c2 == 1) continue;
              for (Color a : palette_minus({1, 2, 3, c1, c2})) {
                push(extra, {{vv1, c2}, {v2y1, c2}, {v1v2, c1}, {vv2, a}});
              }
            }
          }
        } else if (missing.size() == 1) {
          sub = HalinSubcase::Case2_1_2;
          for (const auto& [s1, s2] : s_orders) {
            for (const auto& [t1, t2] : t_orders) {
              for (Color c1 : palette_minus({2, 3, t1, t2, s2})) {
                if (s1 == 3) {
                  push(extra, {{v1v2, c1}, {vv1, t2}, {vv2, t1}, {v2y1, s2}});
                } else if (s1 == t1) {
                  for (const auto& [a, b] : {std::pair{c1, t2}, std::pair{t2, c1}}) {
                    if (a == 1) continue;
                    push(extra, {{vv2, t1}, {v2y1, s2}, {vv1, a}, {v1v2, b}});
                  }
                }
              }
            }
          }
        } else {
          sub = HalinSubcase::Case2_1_3;
          for (const auto& [s1, s2] : s_orders) {
            for (const auto& [t1, t2] : t_orders) {
              if (s2 == 1) continue;
              push(extra, {{vv1, t2}, {v1v2, t1}, {vv2, s2}, {v2y1, s1}});
            }
          }
        }
      } else {
        sub = HalinSubcase::Case2_2;
        std::vector<Color> near_w{2, 3};
        for (const Incidence& inc : g.incident(f.w)) {
          if (out.is_colored(inc.edge)) near_w.push_back(out[inc.edge]);
        }
        for (const auto& [t1, t2] : t_orders) {
          if (t1 != 2) continue;
          for (Color c1 : palette_minus(near_w)) {
            const Assignment extra{{uy1, 2}, {vv1, 3}, {uv, c1}};
            if (!contains({sa, sb}, 1)) {
              for (Color c2 : palette_minus({1, 2, 3, c1, t2})) {
                for (Color a : palette_minus({1, 2, 3, c1, c2})) {
                  push(extra, {{v1v2, 1}, {v2y1, c2}, {vv2, a}});
                }
              }
              continue;
            }
            for (const auto& [s1, s2] : s_orders) {
              if (s1 != 1) continue;
              for (Color c2 : palette_minus({1, 2, 3, c1, s2})) {
                for (Color c3 : palette_minus({1, 2, 3, c1, c2})) {
                  if (c1 != t2) {
                    push(extra, {{v2y1, c1}, {v1v2, c2}, {vv2, c3}});
                  } else {
                    push(extra, {{v1v2, c2}, {vv2, 2}, {v2y1, c3}});
                  }
                }
              }
            }
          }
        }
      }
    }

    const Local local(g, f.u);
    for (const Assignment& a : candidates) {
      for (const auto& [e, c] : a) out.set(e, c);
      if (local.is_star(out)) {
        ++(complementary ? stats_.complementary[static_cast<std::size_t>(sub)] : stats_.subcase[static_cast<std::size_t>(sub)]);
        return;
      }
    }
    ++stats_.searched_extensions;
    for (EdgeId e : fresh) out.clear(e);
    if (!local.complete(out, fresh)) {
      throw Error(ErrorCode::InternalCaseExhaustion,
                  "subcase " + std::string(to_string(sub)) + " admits no star 6-extension");
    }
  }

  // Ball around u large enough to hold every 4-edge path that meets a new edge.
  class Local {
   public:
    Local(const Graph& g, Vertex center) {
      const auto n = static_cast<std::size_t>(g.vertex_count());
      std::vector<std::int32_t> dist(n, -1);
      std::deque<Vertex> q{center};
      dist[static_cast<std::size_t>(center)] = 0;
      while (!q.empty()) {
        const Vertex x = q.front();
        q.pop_front();
        if (dist[static_cast<std::size_t>(x)] == kRadius) continue;
        for (const Incidence& inc : g.incident(x)) {
          if (dist[static_cast<std::size_t>(inc.neighbor)] >= 0) continue;
          dist[static_cast<std::size_t>(inc.neighbor)] = dist[static_cast<std::size_t>(x)] + 1;
          q.push_back(inc.neighbor);
        }
      }
      std::vector<EdgeId> edges;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (dist[static_cast<std::size_t>(g.edge(e).u)] >= 0 && dist[static_cast<std::size_t>(g.edge(e).v)] >= 0) {
          edges.push_back(e);
        }
      }
      sub_ = edge_subgraph(g, edges);
      local_of_.assign(static_cast<std::size_t>(g.edge_count()), -1);
      for (std::size_t i = 0; i < sub_.parent_edge.size(); ++i) {
        local_of_[static_cast<std::size_t>(sub_.parent_edge[i])] = static_cast<EdgeId>(i);
      }
    }

    bool is_star(const EdgeColoring& c) const { return !check_star_partial(sub_.graph, restrict(c)); }

    // Exhaustive completion of the given edges with 6 colors.
    bool complete(EdgeColoring& c, const std::vector<EdgeId>& edges) const {
      EdgeColoring lc = restrict(c);
      std::vector<EdgeId> todo;
      for (EdgeId e : edges) todo.push_back(local_of_[static_cast<std::size_t>(e)]);
      if (!fill(lc, todo, 0)) return false;
      for (EdgeId e : edges) c.set(e, lc[local_of_[static_cast<std::size_t>(e)]]);
      return true;
    }

   private:
    static constexpr std::int32_t kRadius = 8;

    EdgeColoring restrict(const EdgeColoring& c) const {
      EdgeColoring lc(sub_.graph.edge_count());
      for (std::size_t i = 0; i < sub_.parent_edge.size(); ++i) {
        const Color a = c[sub_.parent_edge[i]];
        if (a != EdgeColoring::kUncolored) lc.set(static_cast<EdgeId>(i), a);
      }
      return lc;
    }

    bool fill(EdgeColoring& lc, const std::vector<EdgeId>& todo, std::size_t i) const {
      if (i == todo.size()) return true;
      for (Color a = 1; a <= kColors; ++a) {
        lc.set(todo[i], a);
        if (!check_star_partial(sub_.graph, lc) && fill(lc, todo, i + 1)) return true;
      }
      lc.clear(todo[i]);
      return false;
    }

    EdgeSubgraph sub_;
    std::vector<EdgeId> local_of_;
  };

  HalinStats& stats_;
};

// Proper 3-coloring by backtracking in BFS order; nullopt if none exists
// within the node limit.
std::optional<std::vector<Color>> three_color(const Graph& h) {
  constexpr std::uint64_t kNodeLimit = 50'000'000;
  const auto n = static_cast<std::size_t>(h.vertex_count());
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < h.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::deque<Vertex> q{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop_front();
      order.push_back(x);
      for (const Incidence& inc : h.incident(x)) {
        if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
          seen[static_cast<std::size_t>(inc.neighbor)] = true;
          q.push_back(inc.neighbor);
        }
      }
    }
  }
  std::vector<Color> color(n, 0);
  std::size_t i = 0;
  std::uint64_t nodes = 0;
  while (i < n) {
    const Vertex x = order[i];
    Color& c = color[static_cast<std::size_t>(x)];
    bool placed = false;
    while (++c <= 3) {
      bool clash = false;
      for (const Incidence& inc : h.incident(x)) clash = clash || color[static_cast<std::size_t>(inc.neighbor)] == c;
      if (!clash) {
        placed = true;
        break;
      }
    }
    if (++nodes > kNodeLimit) return std::nullopt;
    if (placed) {
      ++i;
      continue;
    }
    c = 0;
    if (i == 0) return std::nullopt;
    --i;
  }
  return color;
}

}  // namespace

EdgeColoring star6_color_halin(const HalinGraph& h, HalinStats* stats) {
  if (h.graph.vertex_count() == 0 || h.graph.min_degree() != 3 || h.graph.max_degree() != 3 ||
      h.cycle_length() < 3) {
    throw Error(ErrorCode::NotHalin, "input is not a cubic Halin graph");
  }
  HalinStats local;
  HalinColorer colorer(stats ? *stats : local);
  EdgeColoring out = colorer.color(h);
  if (check_star(h.graph, out) || out.max_color() > kColors) {
    throw Error(ErrorCode::InternalCaseExhaustion, "Halin coloring failed verification");
  }
  return out;
}

EdgeColoring star6_color_matched_planar(const Graph& g, std::span<const EdgeId> matching) {
  if (g.vertex_count() > 0 && g.max_degree() > 3) throw Error(ErrorCode::DegreeViolation, "graph is not subcubic");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::int32_t> block(n, -1);
  std::vector<bool> in_matching(static_cast<std::size_t>(g.edge_count()), false);
  for (std::size_t i = 0; i < matching.size(); ++i) {
    const EdgeId e = matching[i];
    if (e < 0 || e >= g.edge_count()) throw Error(ErrorCode::NotPerfectMatching, "matching names an unknown edge");
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      if (block[static_cast<std::size_t>(x)] != -1) {
        throw Error(ErrorCode::NotPerfectMatching, "vertex " + std::to_string(x) + " is matched twice");
      }
      block[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(i);
    }
    in_matching[static_cast<std::size_t>(e)] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (block[x] == -1) throw Error(ErrorCode::NotPerfectMatching, "vertex " + std::to_string(x) + " is unmatched");
  }
  if (const auto gi = girth(g); gi && *gi < 7) {
    throw Error(ErrorCode::GirthTooSmall, "girth " + std::to_string(*gi) + " is below 7");
  }

  std::vector<Edge> contracted;
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_matching[static_cast<std::size_t>(e)]) continue;
    rest.push_back(e);
    contracted.push_back({block[static_cast<std::size_t>(g.edge(e).u)], block[static_cast<std::size_t>(g.edge(e).v)]});
  }
  const auto phi = three_color(Graph(static_cast<std::int32_t>(matching.size()), std::move(contracted)));
  if (!phi) throw Error(ErrorCode::ThreeColoringNotFound, "the contracted graph has no proper 3-coloring");

  EdgeColoring out(g.edge_count());
  for (std::size_t i = 0; i < matching.size(); ++i) out.set(matching[i], (*phi)[i]);

  // g - m has maximum degree 2: color each path or cycle with 4, 5, 6.
  const EdgeSubgraph sub = edge_subgraph(g, rest);
  const Graph& p = sub.graph;
  std::vector<bool> done(static_cast<std::size_t>(p.edge_count()), false);
  auto walk = [&](Vertex start, EdgeId first) {
    std::vector<EdgeId> seq;
    Vertex at = start;
    EdgeId e = first;
    while (e >= 0 && !done[static_cast<std::size_t>(e)]) {
      done[static_cast<std::size_t>(e)] = true;
      seq.push_back(e);
      at = p.edge(e).other(at);
      EdgeId next = -1;
      for (const Incidence& inc : p.incident(at)) {
        if (!done[static_cast<std::size_t>(inc.edge)]) next = inc.edge;
      }
      e = next;
    }
    return seq;
  };
  for (Vertex x = 0; x < p.vertex_count(); ++x) {
    if (p.degree(x) != 1 || done[static_cast<std::size_t>(p.incident(x)[0].edge)]) continue;
    const auto seq = walk(x, p.incident(x)[0].edge);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      out.set(sub.parent_edge[static_cast<std::size_t>(seq[i])], 4 + static_cast<Color>(i % 3));
    }
  }
  for (EdgeId e = 0; e < p.edge_count(); ++e) {
    if (done[static_cast<std::size_t>(e)]) continue;
    const auto seq = walk(p.edge(e).u, e);
    const auto pattern = star3_cycle_pattern(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) out.set(sub.parent_edge[static_cast<std::size_t>(seq[i])], pattern[i] + 3);
  }

  std::vector<EdgeId> m(matching.begin(), matching.end());
  if (check_strong(g, out, std::span<const EdgeId>(m)) || check_star(g, out)) {
    throw Error(ErrorCode::InternalCaseExhaustion, "matched planar coloring failed verification");
  }
  return out;
}

}  // namespace starec
