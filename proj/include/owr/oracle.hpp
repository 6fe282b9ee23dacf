#pragma once
/**
 * Independent visibility oracle.
 *
 * Nothing here uses the vertical decomposition or the route pipeline. The
 * polygon is cut into elementary strips between consecutive distinct
 * x-coordinates of its vertical edges; inside a strip the cross-section is a
 * fixed set of disjoint y-intervals obtained by pairing the horizontal edges
 * that span the strip. A closed segment lies in the closed polygon iff, over
 * every strip it crosses, both of its end heights fall in one interval.
 *
 * All predicates are exact. Rational inputs are scaled to a common integer
 * grid; sampling decides which points get tested, never how.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "owr/decomposition.hpp"
#include "owr/error.hpp"
#include "owr/polygon.hpp"
#include "owr/rational.hpp"
#include "owr/route.hpp"

namespace owr {

class VisibilityOracle {
 public:
  /// `scale` multiplies every polygon coordinate; queries use scaled integers.
  explicit VisibilityOracle(const OrthoPolygon& poly, Coord scale = 1) : scale_(scale) {
    std::vector<std::pair<Coord, std::pair<Coord, Coord>>> hedges;  // (y, (x0, x1))
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Edge e = poly.edge(i);
      if (e.vertical()) {
        xs_.push_back(e.from.x * scale);
      } else {
        hedges.push_back({e.from.y * scale, {std::min(e.from.x, e.to.x) * scale, std::max(e.from.x, e.to.x) * scale}});
      }
    }
    std::sort(xs_.begin(), xs_.end());
    xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
    strips_.assign(xs_.size() - 1, {});
    for (const auto& [y, span] : hedges) {
      const auto j0 = static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), span.first) - xs_.begin());
      const auto j1 = static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), span.second) - xs_.begin());
      for (std::size_t j = j0; j < j1; ++j) strips_[j].push_back(y);
    }
    for (auto& ys : strips_) std::sort(ys.begin(), ys.end());
  }

  Coord scale() const { return scale_; }

  /// Closed segment ab inside the closed polygon (scaled coordinates).
  bool inside(Point a, Point b) const {
    if (a.x == b.x) return vertical_inside(a.x, std::min(a.y, b.y), std::max(a.y, b.y));
    if (a.x > b.x) std::swap(a, b);
    if (a.x < xs_.front() || b.x > xs_.back()) return false;
    const __int128 dx = b.x - a.x;
    const __int128 dy = b.y - a.y;
    // Sign of (y(c) - level) * dx, where y(c) is the height at abscissa c.
    auto above = [&](Coord c, Coord level) { return (static_cast<__int128>(a.y) - level) * dx + dy * (c - a.x); };
    std::size_t j = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), a.x) - xs_.begin()) - 1;
    for (; j + 1 < xs_.size() && xs_[j] < b.x; ++j) {
      const Coord c0 = std::max(a.x, xs_[j]);
      const Coord c1 = std::min(b.x, xs_[j + 1]);
      const auto& ys = strips_[j];
      bool found = false;
      for (std::size_t k = 0; k + 1 < ys.size() && !found; k += 2) {
        found = above(c0, ys[k]) >= 0 && above(c0, ys[k + 1]) <= 0 && above(c1, ys[k]) >= 0 &&
                above(c1, ys[k + 1]) <= 0;
      }
      if (!found) return false;
    }
    return true;
  }

  bool contains(Point p) const { return inside(p, p); }

  /// Rational query; every coordinate must be a multiple of 1/scale.
  bool inside(const RPoint& a, const RPoint& b) const { return inside(to_grid(a), to_grid(b)); }

  Point to_grid(const RPoint& p) const {
    auto conv = [&](const Rational& r) {
      if (scale_ % r.den() != 0) throw Error(ErrorCode::InvalidInput, "point is off the oracle grid");
      return r.num() * (scale_ / r.den());
    };
    return {conv(p.x), conv(p.y)};
  }

  RPoint from_grid(Point p) const { return {Rational(p.x, scale_), Rational(p.y, scale_)}; }

  /// Distinct x-coordinates of vertical edges (scaled).
  std::span<const Coord> breakpoints() const { return xs_; }

 private:
  bool vertical_inside(Coord x, Coord y0, Coord y1) const {
    if (x < xs_.front() || x > xs_.back()) return false;
    const auto j = static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
    std::vector<std::pair<Coord, Coord>> spans;
    auto take = [&](std::size_t strip) {
      const auto& ys = strips_[strip];
      for (std::size_t k = 0; k + 1 < ys.size(); k += 2) spans.emplace_back(ys[k], ys[k + 1]);
    };
    if (xs_[j] == x) {
      if (j > 0) take(j - 1);
      if (j < strips_.size()) take(j);
    } else {
      take(j - 1);
    }
    std::sort(spans.begin(), spans.end());
    Coord lo = 0;
    Coord hi = 0;
    bool open = false;
    for (const auto& [s0, s1] : spans) {
      if (open && s0 <= hi) {
        hi = std::max(hi, s1);
        continue;
      }
      if (open && lo <= y0 && y1 <= hi) return true;
      lo = s0;
      hi = s1;
      open = true;
    }
    return open && lo <= y0 && y1 <= hi;
  }

  Coord scale_;
  std::vector<Coord> xs_;
  std::vector<std::vector<Coord>> strips_;
};

namespace detail {

inline Coord common_scale(std::initializer_list<Rational> values) {
  Coord s = 1;
  for (const Rational& r : values) s = std::lcm(s, r.den());
  return s;
}

}  // namespace detail

/// Closed segment ab contained in the closed polygon.
inline bool segment_inside(const OrthoPolygon& poly, const RPoint& a, const RPoint& b) {
  const VisibilityOracle oracle(poly, detail::common_scale({a.x, a.y, b.x, b.y}));
  return oracle.inside(a, b);
}

/// Straight-line visibility in the closed polygon; boundary grazing allowed.
inline bool sees(const OrthoPolygon& poly, const RPoint& p, const RPoint& q) { return segment_inside(poly, p, q); }

struct AxisSegment {
  RPoint a;
  RPoint b;
};

/// Whether some axis-parallel segment inside the polygon joins a point of s1
/// to a point of s2. Both inputs must be axis-parallel and inside.
inline bool weakly_visible_axis(const OrthoPolygon& poly, const AxisSegment& s1, const AxisSegment& s2) {
  for (const AxisSegment* s : {&s1, &s2}) {
    if (s->a.x != s->b.x && s->a.y != s->b.y) throw Error(ErrorCode::InvalidInput, "segment is not axis-parallel");
    if (!segment_inside(poly, s->a, s->b)) throw Error(ErrorCode::SegmentOutsidePolygon, "segment leaves the polygon");
  }
  // Doubling the common scale keeps midpoints of grid values on the grid.
  const Coord scale = 2 * detail::common_scale({s1.a.x, s1.a.y, s1.b.x, s1.b.y, s2.a.x, s2.a.y, s2.b.x, s2.b.y});
  const VisibilityOracle oracle(poly, scale);
  struct Box {
    Coord x0, x1, y0, y1;
  };
  auto box = [&](const AxisSegment& s) {
    const Point p = oracle.to_grid(s.a);
    const Point q = oracle.to_grid(s.b);
    return Box{std::min(p.x, q.x), std::max(p.x, q.x), std::min(p.y, q.y), std::max(p.y, q.y)};
  };
  const Box b1 = box(s1);
  const Box b2 = box(s2);

  std::vector<Coord> vertex_x;
  std::vector<Coord> vertex_y;
  for (const Point& v : poly.vertices()) {
    vertex_x.push_back(v.x * scale);
    vertex_y.push_back(v.y * scale);
  }
  // Probes along one axis: `along` picks the sliding coordinate range, the
  // probe spans the gap between the two segments' cross ranges.
  auto probe = [&](Coord lo, Coord hi, std::vector<Coord> critical, bool vertical_probe) {
    if (lo > hi) return false;
    std::vector<Coord> cand{lo, hi};
    for (Coord c : critical) {
      if (c > lo && c < hi) cand.push_back(c);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    const std::size_t base = cand.size();
    for (std::size_t k = 0; k + 1 < base; ++k) cand.push_back((cand[k] + cand[k + 1]) / 2);
    const Coord r1lo = vertical_probe ? b1.y0 : b1.x0;
    const Coord r1hi = vertical_probe ? b1.y1 : b1.x1;
    const Coord r2lo = vertical_probe ? b2.y0 : b2.x0;
    const Coord r2hi = vertical_probe ? b2.y1 : b2.x1;
    for (Coord c : cand) {
      if (std::max(r1lo, r2lo) <= std::min(r1hi, r2hi)) return true;
      const Coord from = r1hi < r2lo ? r1hi : r2hi;
      const Coord to = r1hi < r2lo ? r2lo : r1lo;
      const Point p = vertical_probe ? Point{c, from} : Point{from, c};
      const Point q = vertical_probe ? Point{c, to} : Point{to, c};
      if (oracle.inside(p, q)) return true;
    }
    return false;
  };
  return probe(std::max(b1.x0, b2.x0), std::min(b1.x1, b2.x1), vertex_x, true) ||
         probe(std::max(b1.y0, b2.y0), std::min(b1.y1, b2.y1), vertex_y, false);
}

struct CoverageReport {
  Rational step{1, 2};
  std::size_t samples_total = 0;
  std::size_t samples_covered = 0;
  std::vector<RPoint> uncovered;  // sorted by (x, y)

  bool full() const { return samples_covered == samples_total; }
  double ratio() const {
    return samples_total == 0 ? 1.0 : static_cast<double>(samples_covered) / static_cast<double>(samples_total);
  }
};

namespace detail {

// Polygon sample grid: bounding box at the oracle's unit step, inside points only.
inline std::vector<Point> polygon_samples(const OrthoPolygon& poly, const VisibilityOracle& oracle, Coord stride) {
  Coord x0 = poly.vertex(0).x, x1 = x0, y0 = poly.vertex(0).y, y1 = y0;
  for (const Point& v : poly.vertices()) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  const Coord s = oracle.scale();
  std::vector<Point> out;
  for (Coord x = x0 * s; x <= x1 * s; x += stride) {
    for (Coord y = y0 * s; y <= y1 * s; y += stride) {
      if (oracle.contains({x, y})) out.push_back({x, y});
    }
  }
  return out;
}

inline std::vector<Point> route_samples(std::span<const Point> route, Coord scale, Coord stride) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < route.size(); ++i) {
    const Point a{route[i].x * scale, route[i].y * scale};
    out.push_back(a);
    if (i + 1 == route.size()) break;
    const Point b{route[i + 1].x * scale, route[i + 1].y * scale};
    const Coord len = std::abs(b.x - a.x) + std::abs(b.y - a.y);
    const Coord sx = (b.x > a.x) - (b.x < a.x);
    const Coord sy = (b.y > a.y) - (b.y < a.y);
    for (Coord t = stride; t < len; t += stride) out.push_back({a.x + sx * t, a.y + sy * t});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Tries route samples in order of increasing horizontal distance.
inline bool seen_by_any(const VisibilityOracle& oracle, Point p, std::span<const Point> sources) {
  auto right = std::lower_bound(sources.begin(), sources.end(), Point{p.x, INT64_MIN});
  auto left = right;
  while (left != sources.begin() || right != sources.end()) {
    const bool take_right =
        left == sources.begin() || (right != sources.end() && right->x - p.x <= p.x - std::prev(left)->x);
    const Point q = take_right ? *right++ : *--left;
    if (oracle.inside(p, q)) return true;
  }
  return false;
}

}  // namespace detail

/// Samples the closed polygon on a grid of the given step and reports the
/// samples that no route sample sees. An uncovered sample is a true gap; full
/// coverage is evidence at that resolution, not proof.
inline CoverageReport coverage_check(const OrthoPolygon& poly, const Route& route, Rational step = Rational(1, 2)) {
  if (step <= Rational(0)) throw Error(ErrorCode::StepNonPositive, "sampling step must be positive");
  if (route.points.empty()) throw Error(ErrorCode::InvalidInput, "empty route");
  const VisibilityOracle oracle(poly, step.den());
  const Coord stride = step.num();
  const std::vector<Point> samples = detail::polygon_samples(poly, oracle, stride);
  const std::vector<Point> sources = detail::route_samples(route.points, oracle.scale(), stride);
  CoverageReport report;
  report.step = step;
  report.samples_total = samples.size();
  for (const Point& p : samples) {
    if (detail::seen_by_any(oracle, p, sources)) {
      ++report.samples_covered;
    } else {
      report.uncovered.push_back(oracle.from_grid(p));
    }
  }
  return report;
}

namespace detail {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    }
    return true;
  }
  bool all() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      const std::size_t bits = std::min<std::size_t>(64, n_ - 64 * k);
      const std::uint64_t mask = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
      if ((words_[k] & mask) != mask) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

inline constexpr std::size_t kBruteForceSlabCap = 8;

/// Minimum bends over orthogonal routes on the candidate grid (x from
/// vertical edges, y from horizontal edges) that cover every polygon sample
/// at step 1/2. Breadth-first over (grid point, last direction) states,
/// keeping only coverage sets not dominated by another set at the same
/// state. Returns nullopt when no route within `max_bends` covers.
inline std::optional<std::size_t> brute_force_min_bends(const OrthoPolygon& poly, std::size_t max_bends) {
  if (vertical_decomposition(poly).size() > kBruteForceSlabCap) {
    throw Error(ErrorCode::TooLarge, "brute force is limited to 8 slabs");
  }
  constexpr Coord kScale = 2;
  const VisibilityOracle oracle(poly, kScale);
  const std::vector<Point> samples = detail::polygon_samples(poly, oracle, 1);

  std::vector<Coord> xs;
  std::vector<Coord> ys;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Edge e = poly.edge(i);
    (e.vertical() ? xs : ys).push_back((e.vertical() ? e.from.x : e.from.y) * kScale);
  }
  for (auto* v : {&xs, &ys}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }

  std::map<Point, detail::Bits> seen_from;
  auto visibility = [&](Point q) -> const detail::Bits& {
    auto it = seen_from.find(q);
    if (it != seen_from.end()) return it->second;
    detail::Bits b(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (oracle.inside(q, samples[i])) b.set(i);
    }
    return seen_from.emplace(q, std::move(b)).first->second;
  };

  // Grid points and the two lines through each.
  std::vector<Point> grid;
  std::map<Point, std::size_t> grid_id;
  for (Coord x : xs) {
    for (Coord y : ys) {
      if (oracle.contains({x, y})) {
        grid_id.emplace(Point{x, y}, grid.size());
        grid.push_back({x, y});
      }
    }
  }
  // lines[dir][k]: grid ids along one line, sorted. dir 0 horizontal, 1 vertical.
  std::vector<std::vector<std::size_t>> lines[2];
  std::vector<std::pair<std::size_t, std::size_t>> line_of[2];  // (line, slot) per grid id
  line_of[0].resize(grid.size());
  line_of[1].resize(grid.size());
  for (Coord y : ys) {
    std::vector<std::size_t> ids;
    for (Coord x : xs) {
      if (auto it = grid_id.find({x, y}); it != grid_id.end()) ids.push_back(it->second);
    }
    for (std::size_t k = 0; k < ids.size(); ++k) line_of[0][ids[k]] = {lines[0].size(), k};
    lines[0].push_back(std::move(ids));
  }
  for (Coord x : xs) {
    std::vector<std::size_t> ids;
    for (Coord y : ys) {
      if (auto it = grid_id.find({x, y}); it != grid_id.end()) ids.push_back(it->second);
    }
    for (std::size_t k = 0; k < ids.size(); ++k) line_of[1][ids[k]] = {lines[1].size(), k};
    lines[1].push_back(std::move(ids));
  }

  // Coverage of the straight run between two slots of a line, if inside.
  std::map<std::tuple<int, std::size_t, std::size_t, std::size_t>, std::optional<detail::Bits>> run_cache;
  auto run = [&](int dir, std::size_t line, std::size_t i, std::size_t j) -> const std::optional<detail::Bits>& {
    if (i > j) std::swap(i, j);
    const auto key = std::tuple{dir, line, i, j};
    if (auto it = run_cache.find(key); it != run_cache.end()) return it->second;
    const auto& ids = lines[dir][line];
    std::optional<detail::Bits> cov;
    if (oracle.inside(grid[ids[i]], grid[ids[j]])) {
      detail::Bits b(samples.size());
      const Point a = grid[ids[i]];
      const Point c = grid[ids[j]];
      const Coord len = std::abs(c.x - a.x) + std::abs(c.y - a.y);
      for (Coord t = 0; t <= len; ++t) {
        b |= visibility(dir == 0 ? Point{a.x + t, a.y} : Point{a.x, a.y + t});
      }
      cov = std::move(b);
    }
    return run_cache.emplace(key, std::move(cov)).first->second;
  };

  struct State {
    std::size_t at;
    int dir;
    detail::Bits cov;
  };
  std::vector<std::vector<detail::Bits>> kept(grid.size() * 2);
  auto admit = [&](std::vector<State>& next, std::size_t at, int dir, detail::Bits cov) {
    auto& pool = kept[at * 2 + static_cast<std::size_t>(dir)];
    for (const auto& b : pool) {
      if (cov.subset_of(b)) return false;
    }
    std::erase_if(pool, [&](const detail::Bits& b) { return b.subset_of(cov); });
    pool.push_back(cov);
    next.push_back({at, dir, std::move(cov)});
    return true;
  };

  if (samples.empty()) return 0;
  std::vector<State> frontier;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t line = 0; line < lines[dir].size(); ++line) {
      const auto& ids = lines[dir][line];
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i; j < ids.size(); ++j) {
          const auto& cov = run(dir, line, i, j);
          if (!cov) break;
          if (cov->all()) return 0;
          admit(frontier, ids[i], dir, *cov);
          admit(frontier, ids[j], dir, *cov);
        }
      }
    }
  }
  for (std::size_t bends = 1; bends <= max_bends && !frontier.empty(); ++bends) {
    std::vector<State> next;
    for (const State& s : frontier) {
      const int dir = 1 - s.dir;
      const auto [line, slot] = line_of[dir][s.at];
      const auto& ids = lines[dir][line];
      for (std::size_t k = 0; k < ids.size(); ++k) {
        if (k == slot) continue;
        const auto& cov = run(dir, line, slot, k);
        if (!cov) continue;
        detail::Bits merged = s.cov;
        merged |= *cov;
        if (merged.all()) return bends;
        admit(next, ids[k], dir, std::move(merged));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace owr
