#pragma once

#include <compare>
#include <cstdint>

namespace owr {

using Coord = std::int64_t;
// Twice a signed area. Coordinates are bounded by 2^31 so products need 128 bits.
using Area2 = __int128;

inline constexpr Coord kMaxCoord = Coord{1} << 31;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

inline constexpr Area2 cross(Point o, Point a, Point b) {
  return static_cast<Area2>(a.x - o.x) * (b.y - o.y) - static_cast<Area2>(a.y - o.y) * (b.x - o.x);
}

}  // namespace owr
