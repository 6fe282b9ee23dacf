#pragma once
/**
 * Route construction for x-monotone orthogonal polygons.
 *
 * Pipeline: vertical decomposition -> balanced groups -> align levels ->
 * stitched route -> trimmed route. Every stage is a pure function; the
 * whole pipeline is linear in the vertex count after the O(n log n) sweep.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <utility>
#include <span>
#include <string_view>
#include <vector>

#include "owr/balanced.hpp"
#include "owr/decomposition.hpp"
#include "owr/error.hpp"
#include "owr/polygon.hpp"

namespace owr {

enum class TrimMode { Paper, Safe, Off };

constexpr std::string_view to_string(TrimMode mode) {
  switch (mode) {
    case TrimMode::Paper: return "paper";
    case TrimMode::Safe: return "safe";
    case TrimMode::Off: return "off";
  }
  return "off";
}

inline TrimMode parse_trim_mode(std::string_view text) {
  if (text == "paper") return TrimMode::Paper;
  if (text == "safe") return TrimMode::Safe;
  if (text == "off") return TrimMode::Off;
  throw Error(ErrorCode::InvalidInput, "trim mode must be paper, safe or off");
}

/// Horizontal route piece across one balanced group.
struct Align {
  std::size_t group = 0;
  Coord y = 0;
  Coord x_start = 0;
  Coord x_end = 0;
};

/// Vertical route piece at the boundary shared by two consecutive groups.
struct Connector {
  Coord x = 0;
  Coord y_from = 0;
  Coord y_to = 0;
};

/// Orthogonal polyline. A single point is a valid (degenerate) route.
struct Route {
  std::vector<Point> points;
  TrimMode trim = TrimMode::Off;

  friend bool operator==(const Route&, const Route&) = default;
};

struct Segment {
  Point a;
  Point b;
};

struct RouteMetrics {
  Coord length = 0;           // traversal length
  Coord point_set_length = 0;  // length of the union of segments
  std::size_t bends = 0;
  std::size_t segment_count = 0;
};

/// Drops repeated points and merges straight runs. Reversals are kept, so
/// a backtracking traversal keeps its turn-around points.
inline std::vector<Point> normalize_polyline(std::span<const Point> pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  auto dir = [](Point a, Point b) { return Point{(b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y)}; };
  for (const Point& p : pts) {
    if (!out.empty() && out.back() == p) continue;
    if (out.size() >= 2 && dir(out[out.size() - 2], out.back()) == dir(out.back(), p)) {
      out.back() = p;
      continue;
    }
    out.push_back(p);
  }
  return out;
}

inline std::vector<Segment> route_segments(const Route& r) {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < r.points.size(); ++i) segs.push_back({r.points[i], r.points[i + 1]});
  return segs;
}

inline RouteMetrics route_metrics(const Route& r) {
  const std::vector<Point> pts = normalize_polyline(r.points);
  RouteMetrics m;
  if (pts.size() <= 1) return m;
  m.segment_count = pts.size() - 1;
  m.bends = pts.size() - 2;
  // Union length: merge collinear intervals per line.
  std::map<Coord, std::vector<std::pair<Coord, Coord>>> rows;
  std::map<Coord, std::vector<std::pair<Coord, Coord>>> cols;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point a = pts[i];
    const Point b = pts[i + 1];
    m.length += std::abs(b.x - a.x) + std::abs(b.y - a.y);
    if (a.y == b.y) {
      rows[a.y].emplace_back(std::min(a.x, b.x), std::max(a.x, b.x));
    } else {
      cols[a.x].emplace_back(std::min(a.y, b.y), std::max(a.y, b.y));
    }
  }
  for (auto* lines : {&rows, &cols}) {
    for (auto& [level, spans] : *lines) {
      std::sort(spans.begin(), spans.end());
      Coord lo = spans[0].first;
      Coord hi = spans[0].second;
      for (std::size_t k = 1; k < spans.size(); ++k) {
        if (spans[k].first > hi) {
          m.point_set_length += hi - lo;
          lo = spans[k].first;
        }
        hi = std::max(hi, spans[k].second);
      }
      m.point_set_length += hi - lo;
    }
  }
  return m;
}

/// Height of each group's align. A corridor that peaks above both
/// neighbors takes its floor m; every other interior corridor takes its
/// ceiling M. End groups lean toward their single neighbor; a lone group
/// takes m.
inline std::vector<Coord> select_align_levels(std::span<const BalancedGroup> groups) {
  const std::size_t k = groups.size();
  std::vector<Coord> levels(k);
  if (k == 0) return levels;
  if (k == 1) {
    levels[0] = groups[0].m;
    return levels;
  }
  levels[0] = groups[0].M < groups[1].M ? groups[0].M : groups[0].m;
  for (std::size_t i = 1; i + 1 < k; ++i) {
    const bool peak = groups[i - 1].M < groups[i].M && groups[i].M > groups[i + 1].M;
    levels[i] = peak ? groups[i].m : groups[i].M;
  }
  levels[k - 1] = groups[k - 1].M < groups[k - 2].M ? groups[k - 1].M : groups[k - 1].m;
  return levels;
}

struct StitchPlan {
  std::vector<Align> aligns;
  std::vector<Connector> connectors;
};

inline StitchPlan plan_stitch(std::span<const BalancedGroup> groups, std::span<const Coord> levels) {
  if (groups.size() != levels.size()) throw Error(ErrorCode::InvalidInput, "one level per group required");
  StitchPlan plan;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const BalancedGroup& g = groups[i];
    if (levels[i] < g.m || levels[i] > g.M) {
      throw Error(ErrorCode::LevelOutOfCorridor, "align level outside the group corridor", i);
    }
    plan.aligns.push_back({i, levels[i], g.x_left, g.x_right});
    if (i + 1 < groups.size()) plan.connectors.push_back({g.x_right, levels[i], levels[i + 1]});
  }
  return plan;
}

/// Aligns joined left to right by vertical connectors at group boundaries.
inline Route stitch_route(std::span<const BalancedGroup> groups, std::span<const Coord> levels) {
  const StitchPlan plan = plan_stitch(groups, levels);
  std::vector<Point> pts;
  for (const Align& a : plan.aligns) {
    pts.push_back({a.x_start, a.y});
    pts.push_back({a.x_end, a.y});
  }
  return Route{normalize_polyline(pts), TrimMode::Off};
}

/// Non-strict local extremum flags per slab, evaluated on the sequence of
/// distinct polygon edges carrying the slab tops (bottoms). Sequence ends
/// compare against their single neighbor.
struct ExtremumFlags {
  std::vector<bool> upper_max;
  std::vector<bool> lower_min;
};

inline ExtremumFlags local_extrema(std::span<const Slab> slabs) {
  ExtremumFlags flags{std::vector<bool>(slabs.size()), std::vector<bool>(slabs.size())};
  auto mark = [&](auto edge_of, auto level_of, bool want_max, std::vector<bool>& out) {
    struct Run {
      std::size_t first, last;
      Coord y;
    };
    std::vector<Run> runs;
    for (std::size_t i = 0; i < slabs.size(); ++i) {
      if (!runs.empty() && edge_of(slabs[runs.back().first]) == edge_of(slabs[i])) {
        runs.back().last = i;
      } else {
        runs.push_back({i, i, level_of(slabs[i])});
      }
    }
    for (std::size_t r = 0; r < runs.size(); ++r) {
      auto beats = [&](Coord other) { return want_max ? runs[r].y >= other : runs[r].y <= other; };
      const bool ok = (r == 0 || beats(runs[r - 1].y)) && (r + 1 == runs.size() || beats(runs[r + 1].y));
      for (std::size_t i = runs[r].first; i <= runs[r].last; ++i) out[i] = ok;
    }
  };
  mark([](const Slab& s) { return s.upper_edge; }, [](const Slab& s) { return s.u; }, true, flags.upper_max);
  mark([](const Slab& s) { return s.lower_edge; }, [](const Slab& s) { return s.l; }, false, flags.lower_min);
  return flags;
}

struct TrimEnds {
  bool left = true;
  bool right = true;
};

namespace detail {

// Heights where an x-monotone polyline enters and leaves abscissa x
// (equal unless a vertical run sits at x).
struct RunAt {
  Coord enter;
  Coord exit;
};

inline RunAt run_at(std::span<const Point> pts, Coord x) {
  std::size_t j = 0;
  while (j < pts.size() && pts[j].x < x) ++j;
  if (j == pts.size()) return {pts.back().y, pts.back().y};
  if (pts[j].x > x) {
    const Coord y = j == 0 ? pts[0].y : pts[j - 1].y;
    return {y, y};
  }
  RunAt r{pts[j].y, pts[j].y};
  while (j < pts.size() && pts[j].x == x) r.exit = pts[j++].y;
  return r;
}

// Point of the vertical run from `from` to `to` nearest `to` that lies in [lo, hi].
inline std::optional<Coord> reach_on_run(Coord from, Coord to, Coord lo, Coord hi) {
  if (std::max(from, to) < lo || std::min(from, to) > hi) return std::nullopt;
  return std::clamp(to, std::max(lo, std::min(from, to)), std::min(hi, std::max(from, to)));
}

}  // namespace detail

/// Clips an x-monotone route to the x-interval left after the extremum scans.
/// Paper mode removes the extremum slab itself, safe mode keeps it and then
/// moves each cut outward until the route at the cut reaches the y-range
/// shared by every slab beyond it.
inline Route trim_route(const Route& route, std::span<const Slab> slabs, TrimMode mode, TrimEnds ends = {}) {
  if (mode == TrimMode::Off || slabs.empty() || route.points.empty()) {
    Route out = route;
    out.trim = mode;
    return out;
  }
  const ExtremumFlags flags = local_extrema(slabs);
  auto extremum = [&](std::size_t i) { return flags.upper_max[i] || flags.lower_min[i]; };
  const std::vector<Point>& pts = route.points;
  const std::size_t m = slabs.size();

  // Intersections of the y-ranges of slabs 0..c and c..m-1.
  std::vector<std::pair<Coord, Coord>> prefix(m), suffix(m);
  for (std::size_t c = 0; c < m; ++c) {
    prefix[c] = {slabs[c].l, slabs[c].u};
    if (c > 0) prefix[c] = {std::max(prefix[c].first, prefix[c - 1].first), std::min(prefix[c].second, prefix[c - 1].second)};
  }
  for (std::size_t c = m; c-- > 0;) {
    suffix[c] = {slabs[c].l, slabs[c].u};
    if (c + 1 < m) suffix[c] = {std::max(suffix[c].first, suffix[c + 1].first), std::min(suffix[c].second, suffix[c + 1].second)};
  }
  Coord x_lo = slabs.front().x_left;
  Coord x_hi = slabs.back().x_right;
  std::optional<Coord> y_start;
  std::optional<Coord> y_end;
  if (ends.left) {
    std::size_t i = 0;
    while (i + 1 < m && !extremum(i)) ++i;
    x_lo = mode == TrimMode::Paper ? slabs[i].x_right : slabs[i].x_left;
    if (mode == TrimMode::Safe) {
      // Candidate cuts at x_left of slabs i, i-1, ..., 0; the slabs left of
      // a cut are nested, so the last one's range is shared by all of them.
      for (std::size_t c = i + 1; c-- > 0;) {
        const detail::RunAt r = detail::run_at(pts, slabs[c].x_left);
        y_start = c == 0 ? std::optional<Coord>(r.enter)
                         : detail::reach_on_run(r.exit, r.enter, prefix[c - 1].first, prefix[c - 1].second);
        if (y_start) {
          x_lo = slabs[c].x_left;
          break;
        }
      }
    }
  }
  if (ends.right) {
    std::size_t i = m - 1;
    while (i > 0 && !extremum(i)) --i;
    x_hi = mode == TrimMode::Paper ? slabs[i].x_left : slabs[i].x_right;
    if (mode == TrimMode::Safe) {
      for (std::size_t c = i; c < m; ++c) {
        const detail::RunAt r = detail::run_at(pts, slabs[c].x_right);
        y_end = c + 1 == m ? std::optional<Coord>(r.exit)
                           : detail::reach_on_run(r.enter, r.exit, suffix[c + 1].first, suffix[c + 1].second);
        if (y_end) {
          x_hi = slabs[c].x_right;
          break;
        }
      }
    }
  }

  Route out;
  out.trim = mode;
  if (x_lo >= x_hi) {
    const Coord x = ends.left ? x_hi : x_lo;
    out.points.push_back({x, detail::run_at(pts, x).enter});
    return out;
  }
  const detail::RunAt first = detail::run_at(pts, x_lo);
  const detail::RunAt last = detail::run_at(pts, x_hi);
  std::vector<Point> kept;
  kept.push_back({x_lo, y_start.value_or(first.enter)});
  kept.push_back({x_lo, first.exit});
  for (const Point& p : pts) {
    if (p.x > x_lo && p.x < x_hi) kept.push_back(p);
  }
  kept.push_back({x_hi, last.enter});
  kept.push_back({x_hi, y_end.value_or(last.exit)});
  out.points = normalize_polyline(kept);
  return out;
}

inline Route trim_route(const Route& route, const Decomposition& d, TrimMode mode) {
  return trim_route(route, std::span<const Slab>(d.slabs), mode);
}

/// Intermediate results of the monotone pipeline.
struct MonotoneSolution {
  Decomposition decomposition;
  std::vector<BalancedGroup> groups;
  std::vector<Coord> levels;
  Route stitched;
  Route route;
};

inline MonotoneSolution solve_monotone_detailed(const OrthoPolygon& poly, TrimMode mode) {
  MonotoneSolution s;
  s.decomposition = vertical_decomposition(poly);
  s.groups = decompose_balanced(s.decomposition);
  s.levels = select_align_levels(s.groups);
  s.stitched = stitch_route(s.groups, s.levels);
  s.route = trim_route(s.stitched, s.decomposition, mode);
  return s;
}

inline Route solve_monotone(const OrthoPolygon& poly, TrimMode mode) {
  return solve_monotone_detailed(poly, mode).route;
}

}  // namespace owr
