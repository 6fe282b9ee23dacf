#pragma once
/**
 * Routes for path polygons: orthogonal polygons whose vertical-decomposition
 * dual graph is a path but which are not x-monotone.
 *
 * Slabs whose two dual neighbors sit on the same side (reflex rectangles)
 * split the dual path into x-monotone pieces. Each piece is solved with the
 * monotone pipeline, trimmed only at the two free ends of the whole path,
 * and consecutive piece routes are joined by one vertical run along the
 * shared attachment side of the reflex rectangles between them.
 */

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "owr/balanced.hpp"
#include "owr/decomposition.hpp"
#include "owr/error.hpp"
#include "owr/rects.hpp"
#include "owr/route.hpp"

namespace owr {

enum class ElementKind { MonotonePiece, ReflexRect };

constexpr std::string_view to_string(ElementKind k) {
  return k == ElementKind::MonotonePiece ? "piece" : "reflex";
}

struct PlanElement {
  ElementKind kind = ElementKind::MonotonePiece;
  std::vector<std::size_t> slabs;  // 0-based slab positions, in dual-path order
};

struct PiecePlan {
  std::vector<std::size_t> path_order;
  std::vector<PlanElement> elements;
};

/// Slab positions along the dual path, starting from the end slab with the
/// smaller index.
inline std::vector<std::size_t> dual_path_order(const Decomposition& d) {
  if (d.classification == PolygonClass::Other) {
    throw Error(ErrorCode::DualGraphNotPath, "dual graph of the decomposition branches");
  }
  const std::size_t m = d.size();
  std::vector<std::size_t> order;
  order.reserve(m);
  std::size_t start = 0;
  if (m > 1) {
    while (d.adjacency[start].size() != 1) ++start;
  }
  std::size_t prev = m;
  std::size_t cur = start;
  while (order.size() < m) {
    order.push_back(cur);
    std::size_t nxt = m;
    for (std::size_t nb : d.adjacency[cur]) {
      if (nb != prev) nxt = nb;
    }
    if (nxt == m) break;
    prev = cur;
    cur = nxt;
  }
  if (order.size() != m) throw std::logic_error("dual path does not reach every slab");
  return order;
}

inline bool is_reflex_rectangle(const Decomposition& d, std::size_t s) {
  const auto& adj = d.adjacency[s];
  return adj.size() == 2 && d.side_of(s, adj[0]) == d.side_of(s, adj[1]);
}

inline std::vector<std::size_t> find_reflex_rectangles(const Decomposition& d) {
  if (d.classification == PolygonClass::Other) {
    throw Error(ErrorCode::DualGraphNotPath, "dual graph of the decomposition branches");
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < d.size(); ++s) {
    if (is_reflex_rectangle(d, s)) out.push_back(s);
  }
  return out;
}

inline PiecePlan split_pieces(const Decomposition& d) {
  PiecePlan plan;
  plan.path_order = dual_path_order(d);
  for (std::size_t s : plan.path_order) {
    if (is_reflex_rectangle(d, s)) {
      plan.elements.push_back({ElementKind::ReflexRect, {s}});
    } else if (!plan.elements.empty() && plan.elements.back().kind == ElementKind::MonotonePiece) {
      plan.elements.back().slabs.push_back(s);
    } else {
      plan.elements.push_back({ElementKind::MonotonePiece, {s}});
    }
  }
  return plan;
}

/// The union of an element's slabs as a standalone polygon.
inline OrthoPolygon element_polygon(const Decomposition& d, const PlanElement& e) {
  std::vector<Rect> rects;
  for (std::size_t s : e.slabs) {
    const Slab& sl = d.slabs[s];
    rects.push_back({sl.x_left, sl.l, sl.x_right, sl.u});
  }
  return polygon_from_rects(rects);
}

struct PathSolution {
  Decomposition decomposition;
  PiecePlan plan;
  Route route;
};

namespace detail {

// Whether the dual path crosses element `e` left to right.
inline bool runs_left_to_right(const Decomposition& d, const PiecePlan& plan, std::size_t e) {
  const auto& slabs = plan.elements[e].slabs;
  if (slabs.size() >= 2) return d.slabs[slabs[0]].x_left < d.slabs[slabs[1]].x_left;
  const std::size_t s = slabs.front();
  if (e > 0) return d.side_of(s, plan.elements[e - 1].slabs.back()) == Side::Left;
  if (e + 1 < plan.elements.size()) return d.side_of(s, plan.elements[e + 1].slabs.front()) == Side::Right;
  return true;
}

inline std::vector<Point> solve_piece(const Decomposition& d, const PiecePlan& plan, std::size_t e, TrimMode mode) {
  std::vector<Slab> slabs;
  for (std::size_t s : plan.elements[e].slabs) slabs.push_back(d.slabs[s]);
  std::sort(slabs.begin(), slabs.end(), [](const Slab& a, const Slab& b) { return a.x_left < b.x_left; });
  const bool forward = runs_left_to_right(d, plan, e);
  const bool first = e == 0;
  const bool last = e + 1 == plan.elements.size();

  const auto groups = decompose_balanced(std::span<const Slab>(slabs));
  const auto levels = select_align_levels(groups);
  Route r = stitch_route(groups, levels);
  const TrimEnds ends{forward ? first : last, forward ? last : first};
  if (ends.left || ends.right) r = trim_route(r, slabs, mode, ends);
  if (!forward) std::reverse(r.points.begin(), r.points.end());
  return r.points;
}

}  // namespace detail

inline PathSolution solve_path_polygon_detailed(const OrthoPolygon& poly, TrimMode mode) {
  PathSolution sol;
  sol.decomposition = vertical_decomposition(poly);
  const Decomposition& d = sol.decomposition;
  if (d.classification == PolygonClass::Other) {
    throw Error(ErrorCode::DualGraphNotPath, "dual graph of the decomposition branches");
  }
  sol.plan = split_pieces(d);
  if (d.classification == PolygonClass::Monotone) {
    sol.route = solve_monotone(poly, mode);
    return sol;
  }

  std::vector<Point> pts;
  std::vector<std::size_t> pending;  // reflex rectangles since the last piece
  for (std::size_t e = 0; e < sol.plan.elements.size(); ++e) {
    const PlanElement& el = sol.plan.elements[e];
    if (el.kind == ElementKind::ReflexRect) {
      pending.push_back(el.slabs.front());
      continue;
    }
    const std::vector<Point> piece = detail::solve_piece(d, sol.plan, e, mode);
    if (!pending.empty()) {
      const Point from = pts.back();
      const Point to = piece.front();
      if (from.x != to.x) throw std::logic_error("piece routes do not meet at the junction");
      // The run must touch every reflex rectangle it passes.
      Coord lo = std::min(from.y, to.y);
      Coord hi = std::max(from.y, to.y);
      for (std::size_t s : pending) {
        lo = std::min(lo, d.slabs[s].u);
        hi = std::max(hi, d.slabs[s].l);
      }
      const Coord down_first = std::abs(from.y - lo) + (hi - lo) + std::abs(hi - to.y);
      const Coord up_first = std::abs(hi - from.y) + (hi - lo) + std::abs(to.y - lo);
      if (down_first <= up_first) {
        pts.push_back({from.x, lo});
        pts.push_back({from.x, hi});
      } else {
        pts.push_back({from.x, hi});
        pts.push_back({from.x, lo});
      }
      pending.clear();
    }
    pts.insert(pts.end(), piece.begin(), piece.end());
  }
  sol.route = Route{normalize_polyline(pts), mode};
  return sol;
}

inline Route solve_path_polygon(const OrthoPolygon& poly, TrimMode mode) {
  return solve_path_polygon_detailed(poly, mode).route;
}

/// Dispatches on the polygon class.
inline Route solve(const OrthoPolygon& poly, TrimMode mode) { return solve_path_polygon(poly, mode); }

}  // namespace owr
