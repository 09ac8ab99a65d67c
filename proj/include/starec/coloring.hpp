#pragma once

#include <cstdint>
#include <vector>

#include "starec/graph.hpp"

namespace starec {

using Color = std::int32_t;

/// Edge id -> positive color; 0 marks an uncolored edge.
class EdgeColoring {
 public:
  static constexpr Color kUncolored = 0;

  EdgeColoring() = default;
  explicit EdgeColoring(std::int32_t edge_count)
      : colors_(static_cast<std::size_t>(edge_count), kUncolored) {}
  explicit EdgeColoring(std::vector<Color> colors);

  std::int32_t size() const { return static_cast<std::int32_t>(colors_.size()); }
  Color operator[](EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
  bool is_colored(EdgeId e) const { return (*this)[e] != kUncolored; }
  void set(EdgeId e, Color c);
  void clear(EdgeId e) { colors_[static_cast<std::size_t>(e)] = kUncolored; }

  bool is_total() const;
  Color max_color() const;
  const std::vector<Color>& values() const { return colors_; }

  bool operator==(const EdgeColoring&) const = default;

 private:
  std::vector<Color> colors_;
};

/// Number of distinct colors in use.
std::int32_t count_colors(const EdgeColoring& c);

/// Relabels colors to 1..k in order of first appearance by edge id.
EdgeColoring normalize_colors(const EdgeColoring& c);

}  // namespace starec
