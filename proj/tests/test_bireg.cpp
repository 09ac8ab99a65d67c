#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "oracles.hpp"
#include "starec/bireg.hpp"
#include "starec/error.hpp"
#include "starec/generators.hpp"
#include "starec/search.hpp"
#include "starec/verify.hpp"

using namespace starec;

namespace {

// random_bipartite_x2 with |X| capped at what the Y side can absorb
BipartiteInstance bipartite_fit(std::int32_t x, std::int32_t y, std::int32_t max_y, Rng& rng) {
  return random_bipartite_x2(std::min(x, y * max_y), y, max_y, rng);
}

std::vector<std::int32_t> degrees_in(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<std::int32_t> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  return deg;
}

// Random loopless 2k-regular multigraph: union of k random Hamilton cycles.
Graph random_even_regular(std::int32_t n, std::int32_t k, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < k; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t j = 0; j < perm.size(); ++j) edges.push_back({perm[j], perm[(j + 1) % perm.size()]});
  }
  return Graph(n, std::move(edges));
}

}  // namespace

TEST(TwoFactor, EvenRegularFactorization) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int32_t k = 1 + trial % 4;
    const Graph h = random_even_regular(5 + trial % 9, k, rng);
    const auto factors = two_factorize_even_regular(h);
    ASSERT_EQ(factors.size(), static_cast<std::size_t>(k));
    std::vector<int> used(static_cast<std::size_t>(h.edge_count()), 0);
    for (const auto& f : factors) {
      for (std::int32_t d : degrees_in(h, f)) EXPECT_EQ(d, 2);
      for (EdgeId e : f) ++used[static_cast<std::size_t>(e)];
    }
    EXPECT_TRUE(std::all_of(used.begin(), used.end(), [](int u) { return u == 1; }));
  }
}

TEST(TwoFactor, RejectsOddRegular) {
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_THROW(two_factorize_even_regular(k4), Error);
}

TEST(TwoFactor, GadgetFindsOrRefutes) {
  // Oracle: brute force over edge subsets for small graphs.
  Rng rng(17);
  int found = 0, none = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph h = random_graph(6, 6 + trial % 8, rng);
    bool exists = false;
    const std::int32_t m = h.edge_count();
    for (std::uint32_t mask = 0; mask < (1u << m) && !exists; ++mask) {
      if (std::popcount(mask) != h.vertex_count()) continue;
      std::vector<EdgeId> pick;
      for (EdgeId e = 0; e < m; ++e) {
        if (mask >> e & 1u) pick.push_back(e);
      }
      const auto deg = degrees_in(h, pick);
      exists = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    }
    const auto f = find_two_factor(h);
    ASSERT_EQ(f.has_value(), exists) << trial;
    if (f) {
      for (std::int32_t d : degrees_in(h, *f)) EXPECT_EQ(d, 2);
      ++found;
    } else {
      ++none;
    }
  }
  EXPECT_GT(found, 10);
  EXPECT_GT(none, 10);
}

TEST(Decompose, Factors) {
  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int32_t k = 1 + trial % 4;
    const BipartiteInstance inst = random_biregular(4 + trial % 7, 2 * k, rng);
    const Factorization fz = decompose_2_2k(inst.graph, inst.partition);
    ASSERT_EQ(fz.factors.size(), static_cast<std::size_t>(k));
    std::vector<int> used(static_cast<std::size_t>(inst.graph.edge_count()), 0);
    for (const auto& f : fz.factors) {
      const auto deg = degrees_in(inst.graph, f);
      for (Vertex y : inst.partition.part_y) EXPECT_EQ(deg[static_cast<std::size_t>(y)], 2);
      for (Vertex x : inst.partition.part_x) {
        const int d = deg[static_cast<std::size_t>(x)];
        EXPECT_TRUE(d == 0 || d == 2);
      }
      for (EdgeId e : f) ++used[static_cast<std::size_t>(e)];
    }
    EXPECT_TRUE(std::all_of(used.begin(), used.end(), [](int u) { return u == 1; }));
  }
}

TEST(CyclePattern, StarThreeColorsEveryAllowedLength) {
  for (std::size_t n = 2; n <= 60; ++n) {
    if (n == 5) continue;
    const std::vector<Color> p = star3_cycle_pattern(n);
    ASSERT_EQ(p.size(), n);
    EXPECT_LE(*std::max_element(p.begin(), p.end()), 3);
    const Graph g = n == 2 ? Graph(2, {{0, 1}, {1, 0}}) : cycle_graph(static_cast<std::int32_t>(n));
    EXPECT_FALSE(check_star(g, EdgeColoring(p))) << n;
  }
  EXPECT_THROW(star3_cycle_pattern(5), Error);
  EXPECT_THROW(star3_cycle_pattern(1), Error);
}

// Three-list star coloring of cycles: exhaustive check against the oracle
// for C_3..C_6 over lists drawn from a 4-color universe, and C_5 with the
// identical list {1,2,3}, which has no solution.
TEST(ListColoring, ExhaustiveSmallCycles) {
  const std::vector<std::vector<Color>> lists3{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  for (std::int32_t n = 3; n <= 6; ++n) {
    const Graph g = cycle_graph(n);
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == pick.size()) {
        std::vector<std::vector<Color>> lists;
        for (std::size_t j : pick) lists.push_back(lists3[j]);
        // oracle: any choice from the lists that is a star coloring
        bool any = false;
        std::vector<Color> c(pick.size());
        std::function<void(std::size_t)> choose = [&](std::size_t e) {
          if (any) return;
          if (e == c.size()) {
            any = oracle::is_star(g, c);
            return;
          }
          for (Color x : lists[e]) {
            c[e] = x;
            choose(e + 1);
          }
        };
        choose(0);
        const auto got = list_star_color_cycle(lists);
        ASSERT_EQ(got.has_value(), any);
        if (got) {
          EXPECT_TRUE(oracle::is_star(g, *got));
          for (std::size_t e = 0; e < got->size(); ++e) {
            EXPECT_NE(std::find(lists[e].begin(), lists[e].end(), (*got)[e]), lists[e].end());
          }
        }
        return;
      }
      for (std::size_t j = 0; j < lists3.size(); ++j) {
        pick[i] = j;
        rec(i + 1);
      }
    };
    rec(0);
  }
  const std::vector<std::vector<Color>> same(5, {1, 2, 3});
  EXPECT_FALSE(list_star_color_cycle(same));
  const std::vector<std::vector<Color>> tiny(4, {1, 2});
  EXPECT_THROW(list_star_color_cycle(tiny), Error);
}

TEST(ColorBipartite, Even) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int32_t k = 1 + trial % 4;
    const BipartiteInstance inst = trial % 2 ? random_biregular(4 + trial % 12, 2 * k, rng)
                                             : bipartite_fit(10 + trial % 40, 5 + trial % 10, 2 * k, rng);
    const EdgeColoring c = color_2_even(inst.graph, inst.partition, k);
    ASSERT_FALSE(check_star(inst.graph, c)) << trial;
    EXPECT_LE(c.max_color(), 3 * k);
  }
}

TEST(ColorBipartite, Odd) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int32_t k = 1 + trial % 4;
    const BipartiteInstance inst = trial % 2 ? random_biregular(4 + 2 * (trial % 8), 2 * k + 1, rng)
                                             : bipartite_fit(10 + trial % 40, 5 + trial % 10, 2 * k + 1, rng);
    const EdgeColoring c = color_2_odd(inst.graph, inst.partition, k);
    ASSERT_FALSE(check_star(inst.graph, c)) << trial;
    EXPECT_LE(c.max_color(), 3 * k + 2);
  }
}

TEST(ColorBipartite, TwoThree) {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const BipartiteInstance inst = trial % 3 == 0 ? random_biregular(4 + 2 * (trial % 15), 3, rng)
                                                  : bipartite_fit(5 + trial % 60, 3 + trial % 25, 3, rng);
    const EdgeColoring c = color_2_3(inst.graph, inst.partition);
    ASSERT_FALSE(check_star(inst.graph, c)) << trial;
    EXPECT_LE(c.max_color(), 5);
  }
}

TEST(ColorBipartite, DegreeViolation) {
  const CompleteBipartite k = complete_bipartite(3, 3);
  try {
    color_2_3(k.graph, k.partition);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeViolation);
  }
}

TEST(ColorBipartite, TwoP5Example) {
  const ColoredGraph ex = example_2_3_four_colors();
  EXPECT_EQ(ex.graph.edge_count(), 12);
  for (Vertex x : ex.partition.part_x) EXPECT_EQ(ex.graph.degree(x), 2);
  for (Vertex y : ex.partition.part_y) EXPECT_EQ(ex.graph.degree(y), 3);
  EXPECT_FALSE(check_star(ex.graph, ex.coloring));
  EXPECT_EQ(count_colors(ex.coloring), 4);
  EXPECT_EQ(oracle::naive_chi_star(ex.graph), 4);
}

TEST(Embed, KeepsOriginalAndIsBiregular) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteInstance inst = bipartite_fit(12, 6, 3, rng);
    const BiregularEmbedding emb = embed_biregular(inst.graph, inst.partition, 3);
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) EXPECT_EQ(emb.graph.edge(e), inst.graph.edge(e));
    for (Vertex x : emb.partition.part_x) EXPECT_EQ(emb.graph.degree(x), 2);
    for (Vertex y : emb.partition.part_y) EXPECT_EQ(emb.graph.degree(y), 3);
  }
}
