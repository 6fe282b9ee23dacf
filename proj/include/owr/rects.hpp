#pragma once
// Boundary tracing for a union of axis-aligned rectangles.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "owr/point.hpp"
#include "owr/polygon.hpp"

namespace owr {

struct Rect {
  Coord x0 = 0;
  Coord y0 = 0;
  Coord x1 = 0;
  Coord y1 = 0;
};

/// Traces the outline of a union of rectangles on the compressed grid of
/// their coordinates. The union must be a simple polygon (connected, no
/// holes, no pinch vertices); otherwise std::invalid_argument is thrown.
/// Cost is quadratic in the number of distinct coordinates.
inline OrthoPolygon polygon_from_rects(std::span<const Rect> rects) {
  if (rects.empty()) throw std::invalid_argument("no rectangles");
  std::vector<Coord> xs;
  std::vector<Coord> ys;
  for (const Rect& r : rects) {
    if (r.x0 >= r.x1 || r.y0 >= r.y1) throw std::invalid_argument("empty rectangle");
    xs.insert(xs.end(), {r.x0, r.x1});
    ys.insert(ys.end(), {r.y0, r.y1});
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const std::size_t nx = xs.size() - 1;
  const std::size_t ny = ys.size() - 1;
  auto xi = [&](Coord x) { return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin()); };
  auto yi = [&](Coord y) { return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()); };

  std::vector<std::uint8_t> filled(nx * ny, 0);
  for (const Rect& r : rects) {
    for (std::size_t i = xi(r.x0); i < xi(r.x1); ++i) {
      for (std::size_t j = yi(r.y0); j < yi(r.y1); ++j) filled[i * ny + j] = 1;
    }
  }
  auto at = [&](long i, long j) {
    if (i < 0 || j < 0 || i >= static_cast<long>(nx) || j >= static_cast<long>(ny)) return false;
    return filled[static_cast<std::size_t>(i) * ny + static_cast<std::size_t>(j)] != 0;
  };

  // Directed unit edges with the interior on the left, keyed by grid start.
  auto key = [&](std::size_t i, std::size_t j) { return static_cast<std::uint64_t>(i) * (ny + 1) + j; };
  std::unordered_map<std::uint64_t, std::uint64_t> next;
  std::size_t edge_count = 0;
  auto add = [&](std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1) {
    if (!next.emplace(key(i0, j0), key(i1, j1)).second) throw std::invalid_argument("rectangle union has a pinch vertex");
    ++edge_count;
  };
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      if (!at(static_cast<long>(i), static_cast<long>(j))) continue;
      const long li = static_cast<long>(i);
      const long lj = static_cast<long>(j);
      if (!at(li, lj - 1)) add(i, j, i + 1, j);
      if (!at(li + 1, lj)) add(i + 1, j, i + 1, j + 1);
      if (!at(li, lj + 1)) add(i + 1, j + 1, i, j + 1);
      if (!at(li - 1, lj)) add(i, j + 1, i, j);
    }
  }

  std::uint64_t start = next.begin()->first;
  for (const auto& [from, to] : next) start = std::min(start, from);
  std::vector<Point> loop;
  std::uint64_t cur = start;
  std::size_t walked = 0;
  do {
    loop.push_back({xs[cur / (ny + 1)], ys[cur % (ny + 1)]});
    cur = next.at(cur);
    ++walked;
  } while (cur != start && walked <= edge_count);
  if (walked != edge_count) throw std::invalid_argument("rectangle union is not a single simple region");

  std::vector<Point> corners;
  const std::size_t n = loop.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point& a = loop[(k + n - 1) % n];
    const Point& b = loop[k];
    const Point& c = loop[(k + 1) % n];
    if (cross(a, b, c) != 0) corners.push_back(b);
  }
  return validate_polygon(std::move(corners));
}

}  // namespace owr
