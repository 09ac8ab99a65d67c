#pragma once

#include <optional>
#include <span>
#include <vector>

#include "starec/coloring.hpp"
#include "starec/graph.hpp"

namespace starec {

/// Edge sets F_1..F_k partitioning E(G); in each, Y-degrees are 2 and X-degrees 0 or 2.
struct Factorization {
  std::vector<std::vector<EdgeId>> factors;
};

/// k edge-disjoint 2-factors covering a 2k-regular loopless multigraph, via
/// an Euler-tour orientation and perfect matchings. Throws NotEvenRegular.
std::vector<std::vector<EdgeId>> two_factorize_even_regular(const Graph& h);

/// A 2-factor of h (any degrees, loopless), or nullopt if none exists.
/// Uses the standard f-factor gadget and a maximum matching.
std::optional<std::vector<EdgeId>> find_two_factor(const Graph& h);

/// Throws NotBiregular unless g is (2,2k)-biregular for some k >= 1.
Factorization decompose_2_2k(const Graph& g, const BipartitePartition& p);

/// Star 3-coloring of a cycle of the given length in traversal order,
/// using 1,2,1,3 blocks and then 1,2,3 blocks. Throws InvalidArgument for
/// lengths 1 and 5 (C_5 has no star 3-coloring).
std::vector<Color> star3_cycle_pattern(std::size_t length);

/// Colors the given edges of g (a union of disjoint even cycles) with
/// {1,2,3}; other edges stay uncolored. Throws NotCycleFamily, OddCycle.
EdgeColoring star3_color_even_cycle_family(const Graph& g, std::span<const EdgeId> edges);

/// Star coloring of the cycle e_0 e_1 ... e_{n-1} (e_i meets e_{i+1 mod n})
/// choosing each e_i from lists[i]. nullopt if no such coloring exists.
/// Throws ListTooSmall if a list has fewer than 3 colors.
std::optional<std::vector<Color>> list_star_color_cycle(std::span<const std::vector<Color>> lists);

/// Star coloring with at most 3k colors; needs max X-degree <= 2 and max
/// Y-degree <= 2k. Throws DegreeViolation.
EdgeColoring color_2_even(const Graph& g, const BipartitePartition& p, std::int32_t k);

/// Star coloring with at most 5 colors; needs max X-degree <= 2 and max
/// Y-degree <= 3. Throws DegreeViolation.
EdgeColoring color_2_3(const Graph& g, const BipartitePartition& p);

/// Star coloring with at most 3k+2 colors; needs max X-degree <= 2 and max
/// Y-degree <= 2k+1. Throws DegreeViolation, or NoTwoFactorFound when the
/// condensed graph has no 2-factor and the search fallback cannot finish.
EdgeColoring color_2_odd(const Graph& g, const BipartitePartition& p, std::int32_t k);

struct ColoredGraph {
  Graph graph;
  BipartitePartition partition;
  EdgeColoring coloring;
};

/// Two copies of P_5 joined by four cross edges: a (2,3)-biregular graph
/// with a star 4-coloring. Vertices 0..5 are the degree-2 side.
ColoredGraph example_2_3_four_colors();

/// A (2,b)-biregular supergraph of g. Original vertices and edges keep their
/// ids; X vertices of g must have degree 1 or 2.
struct BiregularEmbedding {
  Graph graph;
  BipartitePartition partition;
};

BiregularEmbedding embed_biregular(const Graph& g, const BipartitePartition& p, std::int32_t b);

}  // namespace starec
