#pragma once

#include <cstdint>
#include <random>

#include "starec/coloring.hpp"
#include "starec/graph.hpp"
#include "starec/halin.hpp"

namespace starec {

using Rng = std::mt19937_64;

/// Random cubic Halin graph whose leaf cycle has the given length (>= 3):
/// starts from K_{1,3} and repeatedly splits a uniformly chosen leaf into two.
HalinGraph random_cubic_halin(std::int32_t cycle_length, Rng& rng);

/// The triangular prism (complement of C_6) as tree + leaf cycle.
HalinGraph prism_halin();

struct BipartiteInstance {
  Graph graph;
  BipartitePartition partition;
};

/// Random bipartite graph with |X| = x_count, |Y| = y_count, X-degrees in
/// {1,2} and Y-degrees at most max_y. No parallel edges. Needs
/// y_count * max_y >= x_count.
BipartiteInstance random_bipartite_x2(std::int32_t x_count, std::int32_t y_count, std::int32_t max_y, Rng& rng);

/// Random (2,b)-biregular graph: the subdivision of a random loopless
/// b-regular multigraph on y_count vertices (b * y_count must be even).
BipartiteInstance random_biregular(std::int32_t y_count, std::int32_t b, Rng& rng);

/// Simple graph on n vertices with m distinct random edges.
Graph random_graph(std::int32_t n, std::int32_t m, Rng& rng);

/// Every edge gets a uniform color in 1..k.
EdgeColoring random_coloring(std::int32_t edge_count, Color k, Rng& rng);

/// Two concentric cycles joined by `rungs` spokes with random gaps of 3..5
/// cycle edges: planar, subcubic, girth >= 8.
Graph spoked_ladder(std::int32_t rungs, Rng& rng);

}  // namespace starec
