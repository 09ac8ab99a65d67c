#include <gtest/gtest.h>

#include <functional>

#include "starec/cubic.hpp"
#include "starec/error.hpp"
#include "starec/generators.hpp"
#include "starec/search.hpp"
#include "starec/verify.hpp"

using namespace starec;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Halin, BuildValidates) {
  const std::vector<Edge> tree{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_NO_THROW(build_halin(tree, std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(code_of([&] { build_halin(tree, std::vector<Vertex>{1, 2}); }), ErrorCode::CycleOrderMismatch);
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  EXPECT_EQ(code_of([&] { build_halin(path, std::vector<Vertex>{0, 2}); }), ErrorCode::Degree2InternalVertex);
  const std::vector<Edge> cyc{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_EQ(code_of([&] { build_halin(cyc, std::vector<Vertex>{0, 1, 2}); }), ErrorCode::NotATree);
}

TEST(Halin, GeneratorIsCubic) {
  Rng rng(1);
  for (int n = 3; n < 30; ++n) {
    const HalinGraph h = random_cubic_halin(n, rng);
    EXPECT_EQ(h.cycle_length(), n);
    for (Vertex v = 0; v < h.graph.vertex_count(); ++v) EXPECT_EQ(h.graph.degree(v), 3);
  }
}

TEST(Halin, PrismNeedsSix) {
  const HalinGraph h = prism_halin();
  SearchConfig cfg;
  cfg.time_budget = std::chrono::minutes(2);
  EXPECT_EQ(find_star_coloring(h.graph, 5, cfg).status, SearchStatus::Unsat);
  const EdgeColoring c = star6_color_halin(h);
  EXPECT_FALSE(check_star(h.graph, c));
  EXPECT_EQ(count_colors(c), 6);
}

TEST(Halin, RandomGraphsAndSubcaseCoverage) {
  Rng rng(2718);
  HalinStats stats;
  for (int trial = 0; trial < 500; ++trial) {
    const HalinGraph h = random_cubic_halin(3 + trial % 28, rng);
    const EdgeColoring c = star6_color_halin(h, &stats);
    ASSERT_FALSE(check_star(h.graph, c)) << trial;
    ASSERT_LE(c.max_color(), 6);
  }
  for (std::size_t i = 0; i < kHalinSubcaseCount; ++i) {
    EXPECT_GT(stats.subcase[i], 0u) << to_string(static_cast<HalinSubcase>(i));
  }
  EXPECT_GT(stats.base_cases, 0u);
  EXPECT_GT(stats.mirrored, 0u);
  EXPECT_EQ(stats.searched_extensions, 0u);
}

TEST(Halin, LongCycles) {
  Rng rng(99);
  for (int n : {60, 120, 250}) {
    const HalinGraph h = random_cubic_halin(n, rng);
    const EdgeColoring c = star6_color_halin(h);
    EXPECT_FALSE(check_star(h.graph, c));
    EXPECT_LE(c.max_color(), 6);
  }
}

TEST(MatchedPlanar, SpokedLadders) {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = spoked_ladder(3 + trial % 10, rng);
    const auto m = find_perfect_matching(g);
    ASSERT_TRUE(m);
    const EdgeColoring c = star6_color_matched_planar(g, *m);
    EXPECT_FALSE(check_star(g, c));
    EXPECT_LE(c.max_color(), 6);
    EXPECT_FALSE(check_strong(g, c, std::span<const EdgeId>(*m)));
    for (EdgeId e : *m) EXPECT_LE(c[e], 3);
  }
}

TEST(MatchedPlanar, Cycles) {
  const Graph c14 = cycle_graph(14);
  std::vector<EdgeId> m;
  for (EdgeId e = 0; e < 14; e += 2) m.push_back(e);
  const EdgeColoring c = star6_color_matched_planar(c14, m);
  EXPECT_FALSE(check_star(c14, c));
}

TEST(MatchedPlanar, Errors) {
  const Graph c6 = cycle_graph(6);
  const std::vector<EdgeId> m6{0, 2, 4};
  EXPECT_EQ(code_of([&] { star6_color_matched_planar(c6, m6); }), ErrorCode::GirthTooSmall);
  const Graph c8 = cycle_graph(8);
  const std::vector<EdgeId> bad{0, 1, 4, 6};
  EXPECT_EQ(code_of([&] { star6_color_matched_planar(c8, bad); }), ErrorCode::NotPerfectMatching);
  const std::vector<EdgeId> partial{0, 2};
  EXPECT_EQ(code_of([&] { star6_color_matched_planar(c8, partial); }), ErrorCode::NotPerfectMatching);
  const CompleteBipartite k = complete_bipartite(1, 4);
  const std::vector<EdgeId> one{0};
  EXPECT_EQ(code_of([&] { star6_color_matched_planar(k.graph, one); }), ErrorCode::DegreeViolation);
}
