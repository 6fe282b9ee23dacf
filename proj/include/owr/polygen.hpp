#pragma once
/**
 * Seeded generators for test polygons.
 *
 * Randomness comes from std::mt19937_64, whose output sequence is fixed by
 * the standard, mapped to integer ranges by rejection sampling (no standard
 * distributions, whose algorithms differ between library vendors). The same
 * parameters therefore produce the same polygon on every platform.
 *
 * monotone     m = (n-2)/2 slabs; widths sampled left to right and a lattice
 *              walk of (l, u) levels changing one chain per slab boundary.
 * balanced     same walk, confined to u >= c2 > c1 >= l for a fixed corridor.
 * orthoconvex  u strictly rising to a peak slab and falling after it, l
 *              mirrored with its valley in the same slab, inside a corridor.
 * path         a serpentine of monotone legs stacked in horizontal bands and
 *              joined alternately at the right and left by sideways-U turns.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "owr/error.hpp"
#include "owr/polygon.hpp"
#include "owr/rects.hpp"

namespace owr {

enum class PolygonKind { Monotone, Orthoconvex, Balanced, Path };

constexpr std::string_view to_string(PolygonKind k) {
  switch (k) {
    case PolygonKind::Monotone: return "monotone";
    case PolygonKind::Orthoconvex: return "orthoconvex";
    case PolygonKind::Balanced: return "balanced";
    case PolygonKind::Path: return "path";
  }
  return "monotone";
}

inline PolygonKind parse_polygon_kind(std::string_view s) {
  if (s == "monotone") return PolygonKind::Monotone;
  if (s == "orthoconvex") return PolygonKind::Orthoconvex;
  if (s == "balanced") return PolygonKind::Balanced;
  if (s == "path") return PolygonKind::Path;
  throw Error(ErrorCode::InvalidInput, "kind must be monotone, orthoconvex, balanced or path");
}

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t n_target = 4;
  Coord coord_range = 100;
  PolygonKind kind = PolygonKind::Monotone;
  bool general_position = true;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  Coord uniform(Coord lo, Coord hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<Coord>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return lo + static_cast<Coord>(draw % span);
  }

  bool chance(int numerator, int denominator) { return uniform(0, denominator - 1) < numerator; }

  /// Uniform in [lo, hi] except `skip` (which must lie in the range).
  Coord uniform_except(Coord lo, Coord hi, Coord skip) {
    const Coord v = uniform(lo, hi - 1);
    return v >= skip ? v + 1 : v;
  }

  /// `count` distinct values from [lo, hi], ascending (Floyd's algorithm).
  std::vector<Coord> distinct_sorted(std::size_t count, Coord lo, Coord hi) {
    const Coord size = hi - lo + 1;
    if (static_cast<Coord>(count) > size) throw std::invalid_argument("not enough distinct values");
    std::set<Coord> picked;
    for (Coord j = size - static_cast<Coord>(count); j < size; ++j) {
      const Coord t = uniform(0, j);
      if (!picked.insert(lo + t).second) picked.insert(lo + j);
    }
    return {picked.begin(), picked.end()};
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<Coord>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

struct Level {
  Coord l;
  Coord u;
};

// Outline of an x-monotone slab chain; xs has one more entry than levels.
inline std::vector<Point> monotone_outline(const std::vector<Coord>& xs, const std::vector<Level>& lv) {
  std::vector<Point> pts;
  pts.reserve(2 * xs.size() + 4);
  pts.push_back({xs[0], lv[0].l});
  for (std::size_t i = 1; i < lv.size(); ++i) {
    if (lv[i].l != lv[i - 1].l) {
      pts.push_back({xs[i], lv[i - 1].l});
      pts.push_back({xs[i], lv[i].l});
    }
  }
  pts.push_back({xs.back(), lv.back().l});
  pts.push_back({xs.back(), lv.back().u});
  for (std::size_t i = lv.size() - 1; i > 0; --i) {
    if (lv[i].u != lv[i - 1].u) {
      pts.push_back({xs[i], lv[i].u});
      pts.push_back({xs[i], lv[i - 1].u});
    }
  }
  pts.push_back({xs[0], lv[0].u});
  return pts;
}

inline std::vector<Coord> widths_to_xs(Rng& rng, std::size_t slabs, Coord range) {
  const Coord w_max = std::max<Coord>(1, range / static_cast<Coord>(slabs));
  std::vector<Coord> xs{0};
  for (std::size_t i = 0; i < slabs; ++i) xs.push_back(xs.back() + rng.uniform(1, w_max));
  return xs;
}

// Random walk of levels with l in [l_lo, l_hi], u in [u_lo, u_hi] and l < u.
// Each step changes one chain, or both when `doubles` allows it.
struct WalkBounds {
  Coord l_lo, l_hi, u_lo, u_hi;
};

inline bool step_upper(Rng& rng, Level& cur, const WalkBounds& b) {
  const Coord lo = std::max(b.u_lo, cur.l + 1);
  if (b.u_hi - lo < 1) return false;
  cur.u = rng.uniform_except(lo, b.u_hi, cur.u);
  return true;
}

inline bool step_lower(Rng& rng, Level& cur, const WalkBounds& b) {
  const Coord hi = std::min(b.l_hi, cur.u - 1);
  if (hi - b.l_lo < 1) return false;
  cur.l = rng.uniform_except(b.l_lo, hi, cur.l);
  return true;
}

inline std::vector<Level> level_walk(Rng& rng, std::size_t budget, const WalkBounds& b, bool doubles) {
  std::vector<Level> lv;
  Level cur;
  cur.l = rng.uniform(b.l_lo, std::min(b.l_hi, b.u_hi - 1));
  cur.u = rng.uniform(std::max(b.u_lo, cur.l + 1), b.u_hi);
  lv.push_back(cur);
  while (budget > 0) {
    Level next = cur;
    if (doubles && budget >= 4 && rng.chance(1, 4)) {
      const Level before = cur;
      if (step_upper(rng, next, b) && next.u > before.l) {
        Level tmp = next;
        tmp.u = std::min(next.u, before.u);
        if (step_lower(rng, tmp, b) && tmp.l < before.u && tmp.l < next.u) {
          next.l = tmp.l;
          lv.push_back(next);
          cur = next;
          budget -= 4;
          continue;
        }
      }
      next = cur;
    }
    const bool upper_first = rng.chance(1, 2);
    const bool ok = upper_first ? (step_upper(rng, next, b) || step_lower(rng, next, b))
                                : (step_lower(rng, next, b) || step_upper(rng, next, b));
    if (!ok) throw Error(ErrorCode::InfeasibleParams, "coordinate range too small for the level walk");
    lv.push_back(next);
    cur = next;
    budget -= 2;
  }
  return lv;
}

inline OrthoPolygon generate_walk(Rng& rng, const GenParams& p, const WalkBounds& b) {
  const std::vector<Level> lv = level_walk(rng, p.n_target - 4, b, !p.general_position);
  const std::vector<Coord> xs = widths_to_xs(rng, lv.size(), p.coord_range);
  return validate_polygon(monotone_outline(xs, lv));
}

inline OrthoPolygon generate_orthoconvex(Rng& rng, const GenParams& p) {
  const std::size_t m = (p.n_target - 2) / 2;
  const Coord range = p.coord_range;
  const Coord c1 = range / 2 - 1;
  const Coord c2 = range / 2 + 1;
  const std::size_t peak = static_cast<std::size_t>(rng.uniform(0, static_cast<Coord>(m) - 1));

  // Which chain moves at each boundary; boundary i sits between slabs i and i+1.
  std::vector<bool> upper_moves(m > 0 ? m - 1 : 0);
  std::size_t left_u = 0, left_l = 0, right_u = 0, right_l = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    upper_moves[i] = rng.chance(1, 2);
    const bool left = i < peak;
    (upper_moves[i] ? (left ? left_u : right_u) : (left ? left_l : right_l))++;
  }
  std::vector<Coord> lu = rng.distinct_sorted(left_u, c2, range - 1);
  std::vector<Coord> ru = rng.distinct_sorted(right_u, c2, range - 1);
  std::vector<Coord> ll = rng.distinct_sorted(left_l, 1, c1);
  std::vector<Coord> rl = rng.distinct_sorted(right_l, 1, c1);
  std::reverse(ru.begin(), ru.end());  // falling after the peak
  std::reverse(ll.begin(), ll.end());  // descending into the valley
  lu.push_back(range);
  rl.insert(rl.begin(), 0);

  std::vector<Level> lv(m);
  std::size_t iu = 0, il = 0;
  lv[0] = {ll.empty() ? 0 : ll[0], lu[0]};
  for (std::size_t s = 1; s < m; ++s) {
    lv[s] = lv[s - 1];
    const bool left = s - 1 < peak;
    if (upper_moves[s - 1]) {
      lv[s].u = left ? lu[++iu] : ru[iu++];
      if (!left && iu == right_u) iu = right_u;
    } else {
      lv[s].l = left ? (++il < ll.size() ? ll[il] : 0) : rl[++il];
    }
    if (s == peak) {
      iu = 0;
      il = 0;
    }
  }
  const std::vector<Coord> xs = widths_to_xs(rng, m, range);
  return validate_polygon(monotone_outline(xs, lv));
}

inline OrthoPolygon generate_path(Rng& rng, const GenParams& p) {
  const std::size_t n = p.n_target;
  const Coord range = p.coord_range;
  std::size_t legs_max = (n - 4) / 4 + 1;
  while (legs_max > 2 && (range - static_cast<Coord>(legs_max - 1)) / static_cast<Coord>(legs_max) < 2) --legs_max;
  const std::size_t legs = static_cast<std::size_t>(rng.uniform(2, static_cast<Coord>(legs_max)));
  const Coord band = (range - static_cast<Coord>(legs - 1)) / static_cast<Coord>(legs);
  if (band < 2) throw Error(ErrorCode::InfeasibleParams, "coordinate range too small for a path polygon");

  // Extra slabs beyond one per leg.
  const std::size_t extra = (n - 4 - 4 * (legs - 1)) / 2;
  std::vector<std::size_t> slabs_per_leg(legs, 1);
  for (std::size_t k = 0; k < extra; ++k) slabs_per_leg[static_cast<std::size_t>(rng.uniform(0, static_cast<Coord>(legs) - 1))]++;

  // x layout: left-side values < interior boundaries < right-side values.
  const std::size_t turns = legs - 1;
  const std::size_t left_turns = turns / 2;
  const std::size_t right_turns = turns - left_turns;
  const bool last_leg_forward = (legs - 1) % 2 == 0;
  const std::size_t low = 1 + 2 * left_turns + (last_leg_forward ? 0 : 1);
  const std::size_t high = 2 * right_turns + (last_leg_forward ? 1 : 0);
  const std::size_t mid = extra;
  if (static_cast<Coord>(low + mid + high) > range + 1) {
    throw Error(ErrorCode::InfeasibleParams, "coordinate range too small for distinct x-coordinates");
  }
  const std::vector<Coord> pool = rng.distinct_sorted(low + mid + high, 0, range);
  std::vector<Coord> low_x(pool.begin(), pool.begin() + static_cast<long>(low));
  std::vector<Coord> mid_x(pool.begin() + static_cast<long>(low), pool.begin() + static_cast<long>(low + mid));
  std::vector<Coord> high_x(pool.begin() + static_cast<long>(low + mid), pool.end());
  rng.shuffle(mid_x);

  // Leg ends. Leg j runs left to right when j is even.
  std::vector<Coord> leg_left(legs), leg_right(legs);
  std::size_t lo_i = 0, hi_i = 0;
  std::vector<std::pair<Coord, Coord>> columns_x(turns);  // (x0, x1) of each turn column
  leg_left[0] = low_x[lo_i++];
  for (std::size_t t = 0; t < turns; ++t) {
    if (t % 2 == 0) {  // right turn between legs t and t+1
      const Coord inner = high_x[hi_i++];
      const Coord outer = high_x[hi_i++];
      leg_right[t] = leg_right[t + 1] = inner;
      columns_x[t] = {inner, outer};
    } else {
      const Coord outer = low_x[lo_i++];
      const Coord inner = low_x[lo_i++];
      leg_left[t] = leg_left[t + 1] = inner;
      columns_x[t] = {outer, inner};
    }
  }
  if (last_leg_forward) {
    leg_right[legs - 1] = high_x[hi_i++];
  } else {
    leg_left[legs - 1] = low_x[lo_i++];
  }

  std::vector<Rect> rects;
  std::vector<std::vector<Rect>> leg_slabs(legs);
  std::size_t mid_i = 0;
  for (std::size_t j = 0; j < legs; ++j) {
    std::vector<Coord> xs(mid_x.begin() + static_cast<long>(mid_i),
                          mid_x.begin() + static_cast<long>(mid_i + slabs_per_leg[j] - 1));
    mid_i += slabs_per_leg[j] - 1;
    std::sort(xs.begin(), xs.end());
    xs.insert(xs.begin(), leg_left[j]);
    xs.push_back(leg_right[j]);
    const Coord base = static_cast<Coord>(j) * (band + 1);
    const WalkBounds bounds{base, base + band - 1, base + 1, base + band};
    const std::vector<Level> lv = level_walk(rng, 2 * (slabs_per_leg[j] - 1), bounds, false);
    for (std::size_t s = 0; s < lv.size(); ++s) leg_slabs[j].push_back({xs[s], lv[s].l, xs[s + 1], lv[s].u});
  }
  for (std::size_t t = 0; t < turns; ++t) {
    const bool right = t % 2 == 0;
    const Rect& lower = right ? leg_slabs[t].back() : leg_slabs[t].front();
    const Rect& upper = right ? leg_slabs[t + 1].back() : leg_slabs[t + 1].front();
    rects.push_back({columns_x[t].first, lower.y0, columns_x[t].second, upper.y1});
  }
  for (const auto& leg : leg_slabs) rects.insert(rects.end(), leg.begin(), leg.end());
  OrthoPolygon poly = polygon_from_rects(rects);
  if (poly.size() != n) throw std::logic_error("path generator produced the wrong vertex count");
  return poly;
}

}  // namespace detail

/// Deterministic polygon of the requested kind with exactly n_target vertices.
inline OrthoPolygon generate(const GenParams& p) {
  if (p.n_target < 4 || p.n_target % 2 != 0) throw Error(ErrorCode::InfeasibleParams, "n must be even and at least 4");
  if (p.coord_range < static_cast<Coord>(p.n_target) || p.coord_range > kMaxCoord) {
    throw Error(ErrorCode::InfeasibleParams, "coordinate range must be at least n and at most 2^31");
  }
  Rng rng(p.seed);
  const Coord r = p.coord_range;
  switch (p.kind) {
    case PolygonKind::Monotone:
      return detail::generate_walk(rng, p, {0, r - 1, 1, r});
    case PolygonKind::Balanced: {
      const Coord c1 = rng.uniform(1, r / 2 - 1);
      const Coord c2 = rng.uniform(r / 2 + 1, r - 1);
      return detail::generate_walk(rng, p, {0, c1, c2, r});
    }
    case PolygonKind::Orthoconvex:
      if (!p.general_position) throw Error(ErrorCode::InfeasibleParams, "orthoconvex polygons are always generated in general position");
      return detail::generate_orthoconvex(rng, p);
    case PolygonKind::Path:
      if (p.n_target < 10) throw Error(ErrorCode::InfeasibleParams, "path polygons need at least 10 vertices");
      return detail::generate_path(rng, p);
  }
  throw Error(ErrorCode::InvalidInput, "unknown polygon kind");
}

}  // namespace owr
