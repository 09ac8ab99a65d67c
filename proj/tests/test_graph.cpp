#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <sstream>

#include "starec/error.hpp"
#include "starec/generators.hpp"
#include "starec/graph.hpp"
#include "starec/graph_io.hpp"

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

TEST(Graph, ParallelEdgesKeepDistinctIds) {
  const Graph g(2, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_EQ(girth(g), 2);
}

TEST(Graph, RejectsLoops) {
  EXPECT_EQ(code_of([] { Graph(3, {{0, 1}, {2, 2}}); }), ErrorCode::LoopEdge);
}

TEST(Graph, AdjacentEdges) {
  const Graph g = path_graph(4);
  EXPECT_EQ(g.adjacent_edges(1), (std::vector<EdgeId>{0, 2}));
  EXPECT_EQ(g.adjacent_edges(0), (std::vector<EdgeId>{1}));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, CompleteBipartiteNumbering) {
  const CompleteBipartite k = complete_bipartite(3, 5);
  EXPECT_EQ(k.graph.edge_count(), 15);
  const Edge e = k.graph.edge(2 * 5 + 4);
  EXPECT_EQ(e.u, 2);
  EXPECT_EQ(e.v, 3 + 4);
  EXPECT_EQ(k.partition.max_degree_x(k.graph), 5);
  EXPECT_EQ(k.partition.max_degree_y(k.graph), 3);
  EXPECT_NO_THROW(k.partition.validate(k.graph));
}

TEST(Graph, PartitionValidation) {
  const Graph g = cycle_graph(4);
  EXPECT_EQ(code_of([&] { BipartitePartition::prefix(4, 2).validate(g); }), ErrorCode::NotBipartite);
  EXPECT_NO_THROW(BipartitePartition(4, {0, 2}).validate(g));
}

TEST(Graph, InferBipartition) {
  EXPECT_FALSE(infer_bipartition(cycle_graph(5)));
  // Star K_{1,3}: the leaves (degree 1) should form X.
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto p = infer_bipartition(star);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->part_y, (std::vector<Vertex>{0}));
}

TEST(Graph, SubdivideThenCondenseIsIdentity) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph h = random_graph(8, 14, rng);
    const SubdividedGraph s = subdivide(h);
    EXPECT_EQ(s.graph.edge_count(), 2 * h.edge_count());
    const CondensedGraph c = condense(s.graph, s.partition);
    ASSERT_EQ(c.graph.edge_count(), h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      const Edge a = c.graph.edge(e);
      const std::set<Vertex> got{c.y_of_vertex[static_cast<std::size_t>(a.u)],
                                 c.y_of_vertex[static_cast<std::size_t>(a.v)]};
      const std::set<Vertex> want{h.edge(e).u, h.edge(e).v};
      // original vertex v keeps id v in the subdivision
      EXPECT_EQ(got, want);
      const auto [e1, e2] = c.original_edges[static_cast<std::size_t>(e)];
      EXPECT_EQ(s.graph.edge(e1).other(c.x_of_edge[static_cast<std::size_t>(e)]), c.y_of_vertex[static_cast<std::size_t>(a.u)]);
      EXPECT_EQ(s.graph.edge(e2).other(c.x_of_edge[static_cast<std::size_t>(e)]), c.y_of_vertex[static_cast<std::size_t>(a.v)]);
    }
  }
}

TEST(Graph, CondenseRejectsLoopsAndDegrees) {
  // Both edges of X vertex 0 reach Y vertex 1.
  const Graph g(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(code_of([&] { condense(g, BipartitePartition::prefix(2, 1)); }), ErrorCode::NotBiregular);
  const CompleteBipartite k = complete_bipartite(1, 3);
  EXPECT_EQ(code_of([&] { condense(k.graph, k.partition); }), ErrorCode::NotBiregular);
}

TEST(Graph, Girth) {
  EXPECT_EQ(girth(cycle_graph(7)), 7);
  EXPECT_FALSE(girth(path_graph(5)));
  EXPECT_EQ(girth(complete_bipartite(3, 3).graph), 4);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) EXPECT_GE(*girth(spoked_ladder(4 + i % 5, rng)), 8);
}

TEST(Graph, ShortestCycleIsACycle) {
  const Graph g = complete_bipartite(3, 4).graph;
  const std::vector<EdgeId> c = shortest_cycle(g);
  ASSERT_EQ(c.size(), 4u);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(g.adjacent(c[i], c[(i + 1) % c.size()]));
}

TEST(Graph, Matchings) {
  EXPECT_FALSE(find_perfect_matching(cycle_graph(7)));
  const auto m = find_perfect_matching(cycle_graph(8));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->size(), 4u);
  // Petersen-like odd structure: blossoms are needed for K_4 minus nothing.
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(maximum_matching(k4).size(), 2u);
}

TEST(Graph, Components) {
  const Graph g(5, {{0, 1}, {2, 3}});
  EXPECT_EQ(connected_components(g).size(), 3u);
}

TEST(GraphIo, RoundTrip) {
  Rng rng(3);
  const HalinGraph h = random_cubic_halin(9, rng);
  GraphFile f;
  f.graph = h.graph;
  f.halin_cycle = h.cycle_order;
  std::stringstream s;
  write_graph(s, f);
  const GraphFile back = read_graph(s);
  EXPECT_EQ(back.graph, f.graph);
  EXPECT_EQ(back.halin_cycle, f.halin_cycle);

  const CompleteBipartite k = complete_bipartite(2, 3);
  std::stringstream t;
  write_graph(t, k.graph, 2);
  const GraphFile kb = read_graph(t);
  EXPECT_EQ(kb.bipartite_x, 2);
  EXPECT_EQ(kb.graph, k.graph);
}

TEST(GraphIo, CommentsAndErrors) {
  std::stringstream ok("# header\ngraph 3 2 # n m\n0 1\n1 2\n");
  EXPECT_EQ(read_graph(ok).graph.edge_count(), 2);
  std::stringstream shortfile("graph 3 2\n0 1\n");
  EXPECT_EQ(code_of([&] { read_graph(shortfile); }), ErrorCode::ParseError);
  std::stringstream range("graph 2 1\n0 5\n");
  EXPECT_EQ(code_of([&] { read_graph(range); }), ErrorCode::ParseError);
}

TEST(GraphIo, ColoringRoundTrip) {
  EdgeColoring c(4);
  c.set(0, 3);
  c.set(2, 1);
  std::stringstream s;
  write_coloring(s, c);
  const EdgeColoring back = read_coloring(s);
  EXPECT_EQ(back, c);
  EXPECT_FALSE(back.is_total());
}
