#include "starec/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

#include "starec/error.hpp"

namespace starec {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotProper: return "NotProper";
    case ViolationKind::BicoloredP4: return "BicoloredP4";
    case ViolationKind::BicoloredC4: return "BicoloredC4";
    case ViolationKind::NotInduced: return "NotInduced";
  }
  return "Unknown";
}

EdgeColoring::EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (Color c : colors_) {
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "colors must be positive");
  }
}

void EdgeColoring::set(EdgeId e, Color c) {
  if (c <= 0) throw Error(ErrorCode::InvalidArgument, "colors must be positive");
  colors_[static_cast<std::size_t>(e)] = c;
}

bool EdgeColoring::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

Color EdgeColoring::max_color() const {
  Color best = 0;
  for (Color c : colors_) best = std::max(best, c);
  return best;
}

std::int32_t count_colors(const EdgeColoring& c) {
  std::vector<Color> seen;
  for (Color x : c.values()) {
    if (x != EdgeColoring::kUncolored) seen.push_back(x);
  }
  std::sort(seen.begin(), seen.end());
  return static_cast<std::int32_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

EdgeColoring normalize_colors(const EdgeColoring& c) {
  std::vector<Color> map(static_cast<std::size_t>(c.max_color()) + 1, 0);
  Color next = 0;
  EdgeColoring out(c.size());
  for (EdgeId e = 0; e < c.size(); ++e) {
    if (!c.is_colored(e)) continue;
    auto& slot = map[static_cast<std::size_t>(c[e])];
    if (slot == 0) slot = ++next;
    out.set(e, slot);
  }
  return out;
}

namespace {

void require_total(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.edge_count()) {
    throw Error(ErrorCode::PartialColoring, "coloring size " + std::to_string(c.size()) +
                                                " does not match edge count " + std::to_string(g.edge_count()));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!c.is_colored(e)) throw Error(ErrorCode::PartialColoring, "edge " + std::to_string(e) + " is uncolored");
  }
}

bool less_witness(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Per-vertex (color, edge) lists sorted by color; colored edges only.
using ColorIndex = std::vector<std::vector<std::pair<Color, EdgeId>>>;

ColorIndex build_index(const Graph& g, const EdgeColoring& c) {
  ColorIndex at(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& list = at[static_cast<std::size_t>(v)];
    for (const Incidence& inc : g.incident(v)) {
      if (c.is_colored(inc.edge)) list.emplace_back(c[inc.edge], inc.edge);
    }
    std::sort(list.begin(), list.end());
  }
  return at;
}

std::optional<StarViolation> improper_pair(const Graph& g, const ColorIndex& at) {
  std::optional<StarViolation> best;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& list = at[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      if (list[i].first != list[i + 1].first) continue;
      // Sorted by (color, edge), so the first two of a run are its least pair.
      std::vector<EdgeId> w{list[i].second, list[i + 1].second};
      if (!best || less_witness(w, best->edges)) best = StarViolation{ViolationKind::NotProper, w};
    }
  }
  return best;
}

EdgeId edge_with_color(const ColorIndex& at, Vertex v, Color color, EdgeId except) {
  const auto& list = at[static_cast<std::size_t>(v)];
  auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(color, EdgeId{-1}));
  for (; it != list.end() && it->first == color; ++it) {
    if (it->second != except) return it->second;
  }
  return -1;
}

std::optional<StarViolation> bicolored_witness(const Graph& g, const EdgeColoring& c, const ColorIndex& at) {
  std::set<std::pair<Color, Color>> pairs;
  for (const auto& list : at) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (list[i].first != list[j].first) pairs.emplace(list[i].first, list[j].first);
      }
    }
  }
  std::vector<std::vector<EdgeId>> by_color(static_cast<std::size_t>(c.max_color()) + 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (c.is_colored(e)) by_color[static_cast<std::size_t>(c[e])].push_back(e);
  }

  std::optional<StarViolation> best;
  std::vector<char> visited(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& [a, b] : pairs) {
    std::vector<EdgeId> members = by_color[static_cast<std::size_t>(a)];
    members.insert(members.end(), by_color[static_cast<std::size_t>(b)].begin(),
                   by_color[static_cast<std::size_t>(b)].end());
    for (EdgeId e : members) visited[static_cast<std::size_t>(e)] = 0;

    for (EdgeId start : members) {
      if (visited[static_cast<std::size_t>(start)]) continue;
      // Extend forward from start through endpoint v, alternating colors.
      auto extend = [&](Vertex through, std::vector<EdgeId>& out) -> bool {
        EdgeId cur = start;
        Vertex at_vertex = through;
        while (true) {
          const Color want = c[cur] == a ? b : a;
          const EdgeId next = edge_with_color(at, at_vertex, want, cur);
          if (next == -1) return false;
          if (next == start) return true;
          out.push_back(next);
          at_vertex = g.edge(next).other(at_vertex);
          cur = next;
        }
      };
      std::vector<EdgeId> forward;
      std::vector<EdgeId> backward;
      const bool cycle = extend(g.edge(start).v, forward);
      if (!cycle) extend(g.edge(start).u, backward);
      std::vector<EdgeId> seq(backward.rbegin(), backward.rend());
      seq.push_back(start);
      seq.insert(seq.end(), forward.begin(), forward.end());
      for (EdgeId e : seq) visited[static_cast<std::size_t>(e)] = 1;

      const std::size_t len = seq.size();
      if (len < 4) continue;
      auto consider = [&](ViolationKind kind, std::vector<EdgeId> w) {
        std::sort(w.begin(), w.end());
        if (!best || less_witness(w, best->edges)) best = StarViolation{kind, std::move(w)};
      };
      if (cycle && len == 4) {
        consider(ViolationKind::BicoloredC4, seq);
      } else if (cycle) {
        for (std::size_t i = 0; i < len; ++i) {
          consider(ViolationKind::BicoloredP4,
                   {seq[i], seq[(i + 1) % len], seq[(i + 2) % len], seq[(i + 3) % len]});
        }
      } else {
        for (std::size_t i = 0; i + 4 <= len; ++i) {
          consider(ViolationKind::BicoloredP4, {seq[i], seq[i + 1], seq[i + 2], seq[i + 3]});
        }
      }
    }
  }
  return best;
}

std::optional<StarViolation> star_core(const Graph& g, const EdgeColoring& c) {
  const ColorIndex at = build_index(g, c);
  if (auto v = improper_pair(g, at)) return v;
  return bicolored_witness(g, c, at);
}

}  // namespace

std::optional<StarViolation> check_proper(const Graph& g, const EdgeColoring& c) {
  require_total(g, c);
  return improper_pair(g, build_index(g, c));
}

std::optional<StarViolation> check_star(const Graph& g, const EdgeColoring& c) {
  require_total(g, c);
  return star_core(g, c);
}

std::optional<StarViolation> check_star_partial(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.edge_count()) throw Error(ErrorCode::PartialColoring, "coloring size mismatch");
  return star_core(g, c);
}

std::optional<StarViolation> check_strong(const Graph& g, const EdgeColoring& c,
                                          std::optional<std::span<const EdgeId>> scope) {
  if (c.size() != g.edge_count()) throw Error(ErrorCode::PartialColoring, "coloring size mismatch");
  std::vector<EdgeId> edges;
  if (scope) {
    edges.assign(scope->begin(), scope->end());
  } else {
    edges.resize(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) edges[static_cast<std::size_t>(e)] = e;
  }
  for (EdgeId e : edges) {
    if (!c.is_colored(e)) throw Error(ErrorCode::PartialColoring, "edge " + std::to_string(e) + " is uncolored");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Scope edges grouped by endpoint.
  std::vector<std::vector<EdgeId>> ending_at(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e : edges) {
    ending_at[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    ending_at[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  }
  std::optional<StarViolation> best;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    std::vector<Vertex> near{ed.u, ed.v};
    for (Vertex end : {ed.u, ed.v}) {
      for (const Incidence& inc : g.incident(end)) near.push_back(inc.neighbor);
    }
    for (Vertex w : near) {
      for (EdgeId f : ending_at[static_cast<std::size_t>(w)]) {
        if (f <= e || c[f] != c[e]) continue;
        std::vector<EdgeId> pair{e, f};
        if (!best || less_witness(pair, best->edges)) best = StarViolation{ViolationKind::NotInduced, pair};
      }
    }
  }
  return best;
}

}  // namespace starec
