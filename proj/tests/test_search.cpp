#include <gtest/gtest.h>

#include "oracles.hpp"
#include "small_graphs.hpp"
#include "starec/bireg.hpp"
#include "starec/search.hpp"
#include "starec/verify.hpp"

using namespace starec;

namespace {

ChiResult chi(const Graph& g, Symmetry s = Symmetry::ColorClasses) {
  SearchConfig cfg;
  cfg.symmetry = s;
  cfg.time_budget = std::chrono::minutes(5);
  return chi_star(g, cfg);
}

}  // namespace

TEST(Search, Stars) {
  for (std::int32_t d = 1; d <= 8; ++d) {
    const ChiResult r = chi(complete_bipartite(1, d).graph);
    ASSERT_EQ(r.status, SearchStatus::Colored);
    EXPECT_EQ(r.value, d);
  }
}

TEST(Search, SmallCompleteBipartite) {
  const std::vector<std::tuple<int, int, int>> cases{{2, 2, 3}, {2, 3, 5}, {2, 4, 6}, {3, 3, 6}, {3, 4, 7}};
  for (auto [r, d, v] : cases) {
    const CompleteBipartite k = complete_bipartite(r, d);
    for (Symmetry s : {Symmetry::ColorClasses, Symmetry::BipartiteOrbits}) {
      const ChiResult res = chi(k.graph, s);
      ASSERT_EQ(res.status, SearchStatus::Colored);
      EXPECT_EQ(res.value, v) << r << "," << d;
      EXPECT_FALSE(check_star(k.graph, res.witness));
      EXPECT_EQ(count_colors(res.witness), v);
    }
  }
}

TEST(Search, TwoP5) {
  EXPECT_EQ(chi(example_2_3_four_colors().graph).value, 4);
}

TEST(Search, UnsatAndTimeout) {
  SearchConfig cfg;
  EXPECT_EQ(find_star_coloring(cycle_graph(5), 3, cfg).status, SearchStatus::Unsat);
  const auto ok = find_star_coloring(cycle_graph(5), 4, cfg);
  ASSERT_EQ(ok.status, SearchStatus::Colored);
  EXPECT_FALSE(check_star(cycle_graph(5), *ok.coloring));
  cfg.time_budget = std::chrono::milliseconds(1);
  EXPECT_EQ(find_star_coloring(complete_bipartite(5, 5).graph, 10, cfg).status, SearchStatus::TimedOut);
  cfg.time_budget = std::chrono::minutes(1);
  cfg.max_colors = 5;
  EXPECT_EQ(chi_star(complete_bipartite(3, 3).graph, cfg).status, SearchStatus::Unsat);
}

TEST(Search, ParallelMatchesSerial) {
  SearchConfig cfg;
  cfg.parallel = true;
  for (auto [r, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}}) {
    const ChiResult res = chi_star(complete_bipartite(r, d).graph, cfg);
    EXPECT_EQ(res.value, chi(complete_bipartite(r, d).graph).value);
  }
}

// chi_star agrees with naive partition enumeration on every graph with at
// most seven edges, under each symmetry setting.
TEST(Search, AgreesWithNaiveOnAllSmallGraphs) {
  const std::vector<Graph> graphs = small::graphs_up_to(7);
  ASSERT_GT(graphs.size(), 200u);
  for (const Graph& g : graphs) {
    const std::int32_t want = oracle::naive_chi_star(g);
    for (Symmetry s : {Symmetry::None, Symmetry::ColorClasses, Symmetry::BipartiteOrbits}) {
      if (s == Symmetry::BipartiteOrbits && !infer_bipartition(g)) continue;
      const ChiResult r = chi(g, s);
      ASSERT_EQ(r.status, SearchStatus::Colored);
      ASSERT_EQ(r.value, want) << "edges " << g.edge_count();
      ASSERT_TRUE(oracle::is_star(g, r.witness.values()));
    }
  }
}
