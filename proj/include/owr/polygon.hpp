#pragma once
/**
 * Simple orthogonal polygons with integer vertices.
 *
 * An OrthoPolygon can only be obtained through validate_polygon(), so every
 * instance is simple, has alternating horizontal/vertical edges and is
 * oriented counter-clockwise. Edge i runs from vertex i to vertex i+1.
 */

#include <algorithm>
#include <cstdlib>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "owr/error.hpp"
#include "owr/point.hpp"

namespace owr {

struct Edge {
  Point from;
  Point to;

  bool horizontal() const { return from.y == to.y; }
  bool vertical() const { return from.x == to.x; }
  Coord length() const { return std::abs(to.x - from.x) + std::abs(to.y - from.y); }
};

class OrthoPolygon {
 public:
  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Edge edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }

  /// Twice the (positive) enclosed area.
  Area2 twice_area() const {
    Area2 sum = 0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = vertices_[i];
      const Point& b = vertices_[(i + 1) % n];
      sum += static_cast<Area2>(a.x) * b.y - static_cast<Area2>(b.x) * a.y;
    }
    return sum;
  }

  friend bool operator==(const OrthoPolygon&, const OrthoPolygon&) = default;

 private:
  explicit OrthoPolygon(std::vector<Point> v) : vertices_(std::move(v)) {}
  friend OrthoPolygon validate_polygon(std::vector<Point> raw);

  std::vector<Point> vertices_;
};

namespace detail {

inline bool edges_adjacent(std::size_t a, std::size_t b, std::size_t n) {
  return (a + 1) % n == b || (b + 1) % n == a;
}

struct AxisEdge {
  Coord level;  // y for horizontal, x for vertical
  Coord lo;
  Coord hi;
  std::size_t id;
};

// Edges lying on the same line must not touch at all: horizontal edges are
// never adjacent to each other, neither are vertical ones.
inline void check_collinear_overlaps(std::vector<AxisEdge> edges) {
  std::sort(edges.begin(), edges.end(), [](const AxisEdge& a, const AxisEdge& b) {
    return a.level != b.level ? a.level < b.level : a.lo < b.lo;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const AxisEdge& prev = edges[i - 1];
    const AxisEdge& cur = edges[i];
    if (prev.level == cur.level && cur.lo <= prev.hi) {
      throw Error(ErrorCode::SelfIntersection, "collinear edges touch or overlap", std::max(prev.id, cur.id));
    }
  }
}

// Sweep over x: horizontal edges are active on [lo, hi]; each vertical edge
// queries the active set for a non-adjacent horizontal edge crossing it.
inline void check_crossings(const std::vector<AxisEdge>& horizontal, const std::vector<AxisEdge>& vertical,
                            std::size_t n) {
  struct Event {
    Coord x;
    int kind;  // 0 insert, 1 query, 2 remove
    std::size_t slot;
  };
  std::vector<Event> events;
  events.reserve(2 * horizontal.size() + vertical.size());
  for (std::size_t i = 0; i < horizontal.size(); ++i) {
    events.push_back({horizontal[i].lo, 0, i});
    events.push_back({horizontal[i].hi, 2, i});
  }
  for (std::size_t i = 0; i < vertical.size(); ++i) events.push_back({vertical[i].level, 1, i});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.x != b.x ? a.x < b.x : a.kind < b.kind;
  });

  std::set<std::pair<Coord, std::size_t>> active;  // (y, edge id)
  for (const Event& ev : events) {
    if (ev.kind == 0) {
      active.emplace(horizontal[ev.slot].level, horizontal[ev.slot].id);
    } else if (ev.kind == 2) {
      active.erase({horizontal[ev.slot].level, horizontal[ev.slot].id});
    } else {
      const AxisEdge& v = vertical[ev.slot];
      for (auto it = active.lower_bound({v.lo, 0}); it != active.end() && it->first <= v.hi; ++it) {
        if (!edges_adjacent(it->second, v.id, n)) {
          throw Error(ErrorCode::SelfIntersection, "edges cross or touch", std::max(it->second, v.id));
        }
      }
    }
  }
}

}  // namespace detail

/// Validates raw vertices and returns the normalized counter-clockwise polygon.
/// A repeated closing vertex is dropped; clockwise input is reversed. Error
/// indices refer to the input order (after dropping the closing duplicate).
inline OrthoPolygon validate_polygon(std::vector<Point> raw) {
  if (raw.size() >= 2 && raw.front() == raw.back()) raw.pop_back();
  const std::size_t n = raw.size();
  if (n % 2 != 0) throw Error(ErrorCode::OddVertexCount, "orthogonal polygons have an even vertex count", n);
  if (n < 4) throw Error(ErrorCode::TooFewVertices, "need at least 4 vertices", n);

  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = raw[i];
    if (std::abs(p.x) > kMaxCoord || std::abs(p.y) > kMaxCoord) {
      throw Error(ErrorCode::CoordinateOutOfRange, "coordinate magnitude exceeds 2^31", i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i] == raw[(i + 1) % n]) throw Error(ErrorCode::ZeroLengthEdge, "repeated vertex", i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = raw[i];
    const Point& b = raw[(i + 1) % n];
    if (a.x != b.x && a.y != b.y) throw Error(ErrorCode::NonOrthogonalEdge, "edge is not axis-parallel", i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = raw[(i + n - 1) % n];
    const Point& cur = raw[i];
    const Point& next = raw[(i + 1) % n];
    const bool in_h = prev.y == cur.y;
    const bool out_h = cur.y == next.y;
    if (in_h == out_h) {
      throw Error(ErrorCode::CollinearConsecutiveEdges, "consecutive edges are collinear", i);
    }
  }

  std::vector<detail::AxisEdge> horizontal;
  std::vector<detail::AxisEdge> vertical;
  horizontal.reserve(n / 2);
  vertical.reserve(n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = raw[i];
    const Point& b = raw[(i + 1) % n];
    if (a.y == b.y) {
      horizontal.push_back({a.y, std::min(a.x, b.x), std::max(a.x, b.x), i});
    } else {
      vertical.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y), i});
    }
  }
  detail::check_collinear_overlaps(horizontal);
  detail::check_collinear_overlaps(vertical);
  detail::check_crossings(horizontal, vertical, n);

  OrthoPolygon poly(std::move(raw));
  if (poly.twice_area() < 0) {
    std::reverse(poly.vertices_.begin(), poly.vertices_.end());
  }
  return poly;
}

/// Indices of vertices with interior angle 3π/2.
inline std::vector<std::size_t> reflex_vertices(const OrthoPolygon& poly) {
  std::vector<std::size_t> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(poly.vertex(i + n - 1), poly.vertex(i), poly.vertex(i + 1)) < 0) out.push_back(i);
  }
  return out;
}

/// Mirror image across the diagonal x = y, re-oriented counter-clockwise.
inline OrthoPolygon transposed(const OrthoPolygon& poly) {
  std::vector<Point> pts;
  pts.reserve(poly.size());
  for (const Point& p : poly.vertices()) pts.push_back({p.y, p.x});
  return validate_polygon(std::move(pts));
}

}  // namespace owr
