#pragma once
// Partition of a monotone slab sequence into maximal balanced groups.

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "owr/decomposition.hpp"
#include "owr/error.hpp"

namespace owr {

/// A maximal run of slabs sharing a horizontal corridor [m, M]: every
/// horizontal segment at a height in the corridor spanning [x_left, x_right]
/// lies in the closed polygon.
struct BalancedGroup {
  std::size_t first = 0;  // 0-based slab positions, inclusive
  std::size_t last = 0;
  Coord M = 0;  // min over the group of u
  Coord m = 0;  // max over the group of l
  Coord x_left = 0;
  Coord x_right = 0;

  friend bool operator==(const BalancedGroup&, const BalancedGroup&) = default;
};

/// Greedy left-to-right scan: a group is the longest prefix of the remaining
/// slabs whose smallest top is not below its largest bottom. `slabs` must be
/// an x-ordered chain of adjacent slabs.
inline std::vector<BalancedGroup> decompose_balanced(std::span<const Slab> slabs) {
  std::vector<BalancedGroup> groups;
  if (slabs.empty()) return groups;
  BalancedGroup cur{0, 0, slabs[0].u, slabs[0].l, slabs[0].x_left, slabs[0].x_right};
  for (std::size_t i = 1; i < slabs.size(); ++i) {
    const Slab& s = slabs[i];
    if (s.u < cur.m || s.l > cur.M) {
      groups.push_back(cur);
      cur = BalancedGroup{i, i, s.u, s.l, s.x_left, s.x_right};
      continue;
    }
    cur.last = i;
    cur.M = std::min(cur.M, s.u);
    cur.m = std::max(cur.m, s.l);
    cur.x_right = s.x_right;
  }
  groups.push_back(cur);
  return groups;
}

inline std::vector<BalancedGroup> decompose_balanced(const Decomposition& d) {
  if (d.classification != PolygonClass::Monotone) {
    throw Error(ErrorCode::NotMonotone, "balanced decomposition needs an x-monotone polygon");
  }
  return decompose_balanced(std::span<const Slab>(d.slabs));
}

/// Corridor bounds (m, M).
inline std::pair<Coord, Coord> group_corridor(const BalancedGroup& g) { return {g.m, g.M}; }

}  // namespace owr
