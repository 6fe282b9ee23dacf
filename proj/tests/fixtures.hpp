#pragma once
// Hand-built polygons shared by the test suites.

#include <vector>

#include "owr/owr.hpp"

namespace fixtures {

inline owr::OrthoPolygon rectangle() { return owr::validate_polygon({{0, 0}, {4, 0}, {4, 2}, {0, 2}}); }

inline owr::OrthoPolygon l_shape() { return owr::validate_polygon({{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 3}, {0, 3}}); }

inline owr::OrthoPolygon plus_sign() {
  return owr::validate_polygon(
      {{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {2, 2}, {2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}, {1, 1}});
}

// Two arms rising from a base.
inline owr::OrthoPolygon u_shape() {
  return owr::validate_polygon({{0, 0}, {6, 0}, {6, 4}, {4, 4}, {4, 1}, {2, 1}, {2, 4}, {0, 4}});
}

// Opening to the right; the left column is a reflex rectangle.
inline owr::OrthoPolygon sideways_u() {
  return owr::validate_polygon({{0, 0}, {6, 0}, {6, 2}, {2, 2}, {2, 4}, {6, 4}, {6, 6}, {0, 6}});
}

// Hook whose two turn columns are adjacent reflex rectangles.
inline owr::OrthoPolygon tight_spiral() {
  std::vector<owr::Rect> r{{8, 0, 15, 2}, {7, 0, 8, 6}, {8, 4, 9, 10}, {0, 8, 8, 10}};
  return owr::polygon_from_rects(r);
}

// Spiral with two separate sideways-U turns.
inline owr::OrthoPolygon double_spiral() {
  std::vector<owr::Rect> r{{0, 0, 10, 1}, {10, 0, 11, 10}, {1, 9, 10, 10}, {0, 3, 1, 10}, {1, 3, 8, 4}};
  return owr::polygon_from_rects(r);
}

// Two balanced groups with disjoint corridors whose minimum bend count is 2.
inline owr::OrthoPolygon two_group_comb() {
  return owr::validate_polygon({{0, 19}, {2, 19}, {2, 2}, {5, 2}, {5, 10}, {6, 10}, {6, 3},
                                {13, 3}, {13, 7}, {11, 7}, {11, 4}, {9, 4}, {9, 20}, {0, 20}});
}

// Staircase of three slabs: two groups, yet one vertical segment at x = 4 sees everything.
inline owr::OrthoPolygon z_stair() {
  std::vector<owr::Rect> r{{0, 0, 2, 2}, {2, 0, 4, 4}, {4, 3, 6, 4}};
  return owr::polygon_from_rects(r);
}

inline owr::Slab slab(std::size_t index, owr::Coord x0, owr::Coord x1, owr::Coord l, owr::Coord u) {
  owr::Slab s;
  s.index = index;
  s.x_left = x0;
  s.x_right = x1;
  s.l = l;
  s.u = u;
  s.upper_edge = index;
  s.lower_edge = 1000 + index;
  return s;
}

}  // namespace fixtures
