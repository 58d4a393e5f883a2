#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stairgf/rational.hpp"

namespace stairgf {

using Point = std::pair<int, int>;

/// Closed lattice polygon given by its vertex cycle (unit steps, first vertex not repeated).
struct LatticePolygon {
  std::vector<Point> cycle;

  int perimeter() const { return static_cast<int>(cycle.size()); }
  /// Closed, unit axis-parallel steps, no repeated vertex.
  bool is_valid() const;
  /// Strictly inside (not on the boundary), by parity of crossings.
  bool contains_strictly(const Point& p) const;
  LatticePolygon translated(int dx, int dy) const;
};

/// Half-perimeter -> count.
using CountTable = std::map<int, Integer>;

inline constexpr int kMaxStaircase = 14;
inline constexpr int kMaxPunctured = 12;
inline constexpr int kMaxThreeChoice = 8;

struct EnumOptions {
  Point origin{0, 0};  // where generated shapes are anchored; counts must not depend on it
  bool parallel = false;
};

/// Staircase polygons with half-perimeter n as non-touching pairs of north/east paths.
std::vector<LatticePolygon> staircase_polygons(int half_perimeter, const Point& origin = {0, 0});

CountTable enumerate_staircase(int max_half_perimeter, const EnumOptions& opt = {});

/// Outer staircase polygon plus an inner one strictly inside, vertex-disjoint from it,
/// over all translations of the inner; indexed by the total half-perimeter.
CountTable enumerate_punctured(int max_total_half_perimeter, const EnumOptions& opt = {});

struct ThreeChoiceConvention {
  enum class Objects { Traversals, Polygons };
  /// Traversals: closed walks rooted at a vertex with a direction; Polygons: distinct shapes
  /// admitting at least one admissible traversal.
  Objects objects = Objects::Traversals;
  /// Whether the turn from the last step back into the first step obeys the rule.
  bool closing_turn_checked = false;

  std::string name() const;
  static ThreeChoiceConvention parse(std::string_view name);
  static std::vector<ThreeChoiceConvention> all();
};

/// Walks that never turn right right after an east or west step.
CountTable enumerate_three_choice(int max_half_perimeter, const ThreeChoiceConvention& conv = {},
                                  const EnumOptions& opt = {});

}  // namespace stairgf
