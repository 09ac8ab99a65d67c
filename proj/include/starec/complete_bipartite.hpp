#pragma once

#include <string_view>
#include <vector>

#include "starec/coloring.hpp"

namespace starec {

// Colorings below use the numbering of complete_bipartite(r, d): edge x_i y_j has id i*d + j.

struct FixtureKey {
  std::int32_t r;
  std::int32_t d;
  bool operator==(const FixtureKey&) const = default;
};

/// Stored colorings of K_{r,d}, sorted by (r, d).
std::vector<FixtureKey> fixture_catalog();
bool has_fixture(std::int32_t r, std::int32_t d);
/// Throws UnknownFixture.
EdgeColoring fixture(std::int32_t r, std::int32_t d);
/// Raw stored text; its header comment names the color count.
std::string_view fixture_text(std::int32_t r, std::int32_t d);
/// Color count declared in the fixture header.
std::int32_t fixture_declared_colors(std::int32_t r, std::int32_t d);

/// Star coloring of K_{2,d} with max(d, 2d - floor(d/2)) colors.
EdgeColoring color_k2d(std::int32_t d);

/// Star coloring of K_{3,d}: 3*ceil(d/2) colors for d = 3 and d >= 5;
/// K_{3,4} gets 7, K_{3,2} gets 5 and K_{3,1} gets 3 (all optimal).
EdgeColoring color_k3d(std::int32_t d);

/// K_{4,d} from K_{4,12} blocks with disjoint palettes; at most 20*ceil(d/12) colors.
EdgeColoring color_k4d_blocks(std::int32_t d);

/// K_{r,d} tiled by (restrictions of) the K_{8,8} fixture with disjoint
/// palettes; at most 15*ceil(r/8)*ceil(d/8) colors.
EdgeColoring color_krd_blocks(std::int32_t r, std::int32_t d);

enum class KrdConstruction { K88Tiling, K3dRows };

std::string_view to_string(KrdConstruction c);

struct KrdColoring {
  EdgeColoring coloring;
  KrdConstruction construction;
};

/// Better of the K_{8,8} tiling and stacking K_{3,d} colorings of row triples.
KrdColoring color_krd_best(std::int32_t r, std::int32_t d);

/// Coloring of K_{d,r} from a coloring of K_{r,d}.
EdgeColoring transpose_coloring(const EdgeColoring& c, std::int32_t r, std::int32_t d);

}  // namespace starec
