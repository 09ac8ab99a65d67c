#include "starec/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "starec/error.hpp"

namespace starec {

HalinGraph random_cubic_halin(std::int32_t cycle_length, Rng& rng) {
  if (cycle_length < 3) throw Error(ErrorCode::InvalidArgument, "cycle length must be at least 3");
  std::vector<Edge> tree{{0, 1}, {0, 2}, {0, 3}};
  std::vector<Vertex> order{1, 2, 3};
  Vertex next = 4;
  while (static_cast<std::int32_t>(order.size()) < cycle_length) {
    std::uniform_int_distribution<std::size_t> pick(0, order.size() - 1);
    const std::size_t i = pick(rng);
    const Vertex leaf = order[i];
    tree.push_back({leaf, next});
    tree.push_back({leaf, next + 1});
    order[i] = next;
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(i) + 1, next + 1);
    next += 2;
  }
  return build_halin(tree, order);
}

HalinGraph prism_halin() {
  const std::vector<Edge> tree{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
  const std::vector<Vertex> order{2, 3, 4, 5};
  return build_halin(tree, order);
}

BipartiteInstance random_bipartite_x2(std::int32_t x_count, std::int32_t y_count, std::int32_t max_y, Rng& rng) {
  if (x_count < 0 || y_count < 1 || max_y < 1) throw Error(ErrorCode::InvalidArgument, "bad generator parameters");
  std::int64_t capacity = static_cast<std::int64_t>(y_count) * max_y;
  if (capacity < x_count) throw Error(ErrorCode::InvalidArgument, "Y side too small for one edge per X vertex");
  std::vector<std::int32_t> load(static_cast<std::size_t>(y_count), 0);
  std::vector<Edge> edges;
  std::uniform_int_distribution<std::int32_t> ddist(1, 2);
  std::vector<Vertex> open;
  for (Vertex x = 0; x < x_count; ++x) {
    // leave at least one slot for every later X vertex
    const std::int64_t later = x_count - x - 1;
    std::int32_t want = ddist(rng);
    if (capacity - 2 < later) want = 1;
    Vertex first = -1;
    for (std::int32_t k = 0; k < want; ++k) {
      open.clear();
      for (Vertex y = 0; y < y_count; ++y) {
        if (y != first && load[static_cast<std::size_t>(y)] < max_y) open.push_back(y);
      }
      if (open.empty()) break;
      const Vertex y = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
      ++load[static_cast<std::size_t>(y)];
      --capacity;
      edges.push_back({x, x_count + y});
      first = y;
    }
  }
  const std::int32_t n = x_count + y_count;
  return {Graph(n, std::move(edges)), BipartitePartition::prefix(n, x_count)};
}

BipartiteInstance random_biregular(std::int32_t y_count, std::int32_t b, Rng& rng) {
  if (y_count < 2 || b < 1 || (static_cast<std::int64_t>(y_count) * b) % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "need y_count >= 2 and an even number of stubs");
  }
  std::vector<Vertex> stubs;
  for (Vertex y = 0; y < y_count; ++y) stubs.insert(stubs.end(), static_cast<std::size_t>(b), y);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  // Repair loops by swapping an endpoint with a random other pair.
  std::uniform_int_distribution<std::size_t> pairs(0, stubs.size() / 2 - 1);
  for (std::int32_t guard = 0;; ++guard) {
    bool clean = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] != stubs[i + 1]) continue;
      clean = false;
      const std::size_t j = 2 * pairs(rng);
      std::swap(stubs[i], stubs[j]);
    }
    if (clean) break;
    if (guard > 100000) throw Error(ErrorCode::InvalidArgument, "could not build a loopless regular multigraph");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});
  const SubdividedGraph s = subdivide(Graph(y_count, std::move(edges)));
  return {s.graph, s.partition};
}

Graph random_graph(std::int32_t n, std::int32_t m, Rng& rng) {
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (n < 1 || m < 0 || m > pairs) throw Error(ErrorCode::InvalidArgument, "too many edges for a simple graph");
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<Edge> edges;
  std::uniform_int_distribution<Vertex> vd(0, n - 1);
  while (static_cast<std::int32_t>(edges.size()) < m) {
    Vertex a = vd(rng);
    Vertex b = vd(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) continue;
    edges.push_back({a, b});
  }
  return Graph(n, std::move(edges));
}

EdgeColoring random_coloring(std::int32_t edge_count, Color k, Rng& rng) {
  std::uniform_int_distribution<Color> cd(1, k);
  EdgeColoring c(edge_count);
  for (EdgeId e = 0; e < edge_count; ++e) c.set(e, cd(rng));
  return c;
}

Graph spoked_ladder(std::int32_t rungs, Rng& rng) {
  if (rungs < 3) throw Error(ErrorCode::InvalidArgument, "a spoked ladder needs at least 3 rungs");
  std::uniform_int_distribution<std::int32_t> gap_dist(3, 5);
  std::vector<std::int32_t> gaps;
  std::int32_t length = 0;
  for (std::int32_t i = 0; i < rungs; ++i) {
    gaps.push_back(gap_dist(rng));
    length += gaps.back();
  }
  // Even cycle length keeps a perfect matching available.
  if (length % 2 != 0) {
    const std::int32_t delta = gaps.back() == 5 ? -1 : 1;
    gaps.back() += delta;
    length += delta;
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < length; ++i) {
    edges.push_back({i, (i + 1) % length});
    edges.push_back({length + i, length + (i + 1) % length});
  }
  Vertex at = 0;
  for (std::int32_t g : gaps) {
    edges.push_back({at, length + at});
    at += g;
  }
  return Graph(2 * length, std::move(edges));
}

}  // namespace starec
