#include "starec/complete_bipartite.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "starec/error.hpp"
#include "starec/graph_io.hpp"
#include "starec/search.hpp"

namespace starec {
namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();
}

namespace {

std::string fixture_name(std::int32_t r, std::int32_t d) {
  return "k" + std::to_string(r) + "_" + std::to_string(d);
}

const std::map<std::pair<std::int32_t, std::int32_t>, std::string_view>& fixture_map() {
  static const auto table = [] {
    std::map<std::pair<std::int32_t, std::int32_t>, std::string_view> m;
    for (const auto& [name, text] : detail::embedded_fixtures()) {
      // names look like k<r>_<d>
      const auto sep = name.find('_');
      const auto r = std::stoi(std::string(name.substr(1, sep - 1)));
      const auto d = std::stoi(std::string(name.substr(sep + 1)));
      m.emplace(std::make_pair(r, d), text);
    }
    return m;
  }();
  return table;
}

// Copies block coloring (rows x cols, row-major) into K_{r,d} at (row0, col0), shifting colors.
void place(EdgeColoring& out, std::int32_t d, std::int32_t row0, std::int32_t col0, const EdgeColoring& block,
           std::int32_t block_d, std::int32_t rows, std::int32_t cols, Color offset) {
  for (std::int32_t i = 0; i < rows; ++i) {
    for (std::int32_t j = 0; j < cols; ++j) {
      out.set((row0 + i) * d + col0 + j, block[i * block_d + j] + offset);
    }
  }
}

EdgeColoring searched_k3d(std::int32_t d, Color t) {
  SearchConfig cfg;
  cfg.symmetry = Symmetry::BipartiteOrbits;
  cfg.time_budget = std::chrono::minutes(5);
  const auto kb = complete_bipartite(3, d);
  cfg.partition = kb.partition;
  const auto outcome = find_star_coloring(kb.graph, t, cfg);
  if (outcome.status != SearchStatus::Colored) {
    throw Error(ErrorCode::InternalCaseExhaustion, "no star coloring of K_{3," + std::to_string(d) + "} with " +
                                                       std::to_string(t) + " colors");
  }
  return *outcome.coloring;
}

// K_{3,2k} with columns u_1..u_k then v_1..v_k; needs k >= 3.
EdgeColoring k3d_even(std::int32_t k) {
  const std::int32_t d = 2 * k;
  EdgeColoring c(3 * d);
  auto setc = [&](std::int32_t row, std::int32_t col, Color color) { c.set(row * d + col, color); };
  for (std::int32_t i = 1; i <= k; ++i) {
    setc(0, i - 1, i);
    setc(1, i - 1, i + k);
    setc(2, i - 1, i + 2 * k);
  }
  const std::int32_t v0 = k - 1;  // column of v_i is v0 + i
  for (std::int32_t i = 1; i <= k; ++i) setc(0, v0 + i, i + k);
  for (std::int32_t i = 1; i <= k - 1; ++i) setc(1, v0 + i, i + 2 * k + 1);
  setc(1, v0 + k, 2 * k + 1);
  for (std::int32_t i = 1; i <= k - 2; ++i) setc(2, v0 + i, i + 2);
  setc(2, v0 + k - 1, 1);
  setc(2, v0 + k, 2);
  return c;
}

EdgeColoring drop_column(const EdgeColoring& c, std::int32_t r, std::int32_t d, std::int32_t col) {
  EdgeColoring out(r * (d - 1));
  for (std::int32_t i = 0; i < r; ++i) {
    std::int32_t jj = 0;
    for (std::int32_t j = 0; j < d; ++j) {
      if (j == col) continue;
      out.set(i * (d - 1) + jj, c[i * d + j]);
      ++jj;
    }
  }
  return out;
}

// K_{3,d} colorings stacked on consecutive row triples, one palette per triple.
EdgeColoring k3d_rows(std::int32_t r, std::int32_t d) {
  const EdgeColoring base = color_k3d(d);
  const Color width = base.max_color();
  EdgeColoring out(r * d);
  for (std::int32_t row0 = 0, block = 0; row0 < r; row0 += 3, ++block) {
    place(out, d, row0, 0, base, d, std::min(3, r - row0), d, block * width);
  }
  return out;
}

}  // namespace

std::vector<FixtureKey> fixture_catalog() {
  std::vector<FixtureKey> keys;
  for (const auto& [key, text] : fixture_map()) keys.push_back({key.first, key.second});
  return keys;
}

bool has_fixture(std::int32_t r, std::int32_t d) { return fixture_map().count({r, d}) > 0; }

std::string_view fixture_text(std::int32_t r, std::int32_t d) {
  const auto it = fixture_map().find({r, d});
  if (it == fixture_map().end()) {
    throw Error(ErrorCode::UnknownFixture, "no stored coloring for K_{" + std::to_string(r) + "," +
                                               std::to_string(d) + "} (" + fixture_name(r, d) + ")");
  }
  return it->second;
}

EdgeColoring fixture(std::int32_t r, std::int32_t d) {
  std::istringstream in{std::string(fixture_text(r, d))};
  EdgeColoring c = read_coloring(in);
  if (c.size() != r * d || !c.is_total()) {
    throw Error(ErrorCode::ParseError, "fixture " + fixture_name(r, d) + " does not color every edge");
  }
  return c;
}

std::int32_t fixture_declared_colors(std::int32_t r, std::int32_t d) {
  const std::string text(fixture_text(r, d));
  // Header: "# K_{r,d}, N colors; ..."
  const auto comma = text.find(", ");
  const auto word = text.find(" colors");
  if (comma == std::string::npos || word == std::string::npos || word < comma) {
    throw Error(ErrorCode::ParseError, "fixture " + fixture_name(r, d) + " lacks a color-count header");
  }
  return std::stoi(text.substr(comma + 2, word - comma - 2));
}

EdgeColoring color_k2d(std::int32_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  EdgeColoring c(2 * d);
  const std::int32_t half = d / 2;
  for (std::int32_t i = 1; i <= d; ++i) {
    c.set(i - 1, i);
    c.set(d + i - 1, i <= half ? d - i + 1 : i + (d + 1) / 2);
  }
  return c;
}

EdgeColoring color_k3d(std::int32_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  if (d == 1) return EdgeColoring(std::vector<Color>{1, 2, 3});
  if (d == 2) return transpose_coloring(color_k2d(3), 2, 3);
  if (d == 3) return searched_k3d(3, 6);
  if (d == 4) return searched_k3d(4, 7);
  const std::int32_t k = (d + 1) / 2;
  EdgeColoring even = k3d_even(k);
  if (d % 2 == 0) return even;
  // K_{3,2k-1} sits inside K_{3,2k}; drop a column that keeps all 3k colors.
  for (std::int32_t col = 2 * k - 1; col >= 0; --col) {
    EdgeColoring c = drop_column(even, 3, 2 * k, col);
    if (count_colors(c) == 3 * k) return c;
  }
  throw Error(ErrorCode::InternalCaseExhaustion, "every column restriction loses a color");
}

EdgeColoring color_k4d_blocks(std::int32_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  EdgeColoring out(4 * d);
  const EdgeColoring block = fixture(4, 12);
  const std::int32_t full = d / 12;
  for (std::int32_t b = 0; b < full; ++b) place(out, d, 0, 12 * b, block, 12, 4, 12, 20 * b);
  const std::int32_t a = d % 12;
  if (a == 0) return out;
  EdgeColoring rest;
  if (a >= 4) {
    rest = fixture(4, a);
  } else if (a == 1) {
    rest = EdgeColoring(std::vector<Color>{1, 2, 3, 4});
  } else if (a == 2) {
    rest = transpose_coloring(color_k2d(4), 2, 4);
  } else {
    rest = transpose_coloring(color_k3d(4), 3, 4);
  }
  place(out, d, 0, 12 * full, rest, a, 4, a, 20 * full);
  return out;
}

EdgeColoring color_krd_blocks(std::int32_t r, std::int32_t d) {
  if (r < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "r and d must be positive");
  const EdgeColoring block = fixture(8, 8);
  EdgeColoring out(r * d);
  const std::int32_t col_blocks = (d + 7) / 8;
  for (std::int32_t bi = 0; bi * 8 < r; ++bi) {
    for (std::int32_t bj = 0; bj < col_blocks; ++bj) {
      place(out, d, 8 * bi, 8 * bj, block, 8, std::min(8, r - 8 * bi), std::min(8, d - 8 * bj),
            15 * (bi * col_blocks + bj));
    }
  }
  return out;
}

std::string_view to_string(KrdConstruction c) {
  return c == KrdConstruction::K88Tiling ? "k88-tiling" : "k3d-rows";
}

KrdColoring color_krd_best(std::int32_t r, std::int32_t d) {
  KrdColoring tiled{color_krd_blocks(r, d), KrdConstruction::K88Tiling};
  KrdColoring rows{k3d_rows(r, d), KrdConstruction::K3dRows};
  return count_colors(rows.coloring) < count_colors(tiled.coloring) ? rows : tiled;
}

EdgeColoring transpose_coloring(const EdgeColoring& c, std::int32_t r, std::int32_t d) {
  if (c.size() != r * d) throw Error(ErrorCode::InvalidArgument, "coloring size does not match r*d");
  EdgeColoring out(r * d);
  for (std::int32_t i = 0; i < r; ++i) {
    for (std::int32_t j = 0; j < d; ++j) {
      if (c.is_colored(i * d + j)) out.set(j * r + i, c[i * d + j]);
    }
  }
  return out;
}

}  // namespace starec
