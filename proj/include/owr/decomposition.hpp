#pragma once
/**
 * Vertical decomposition of an orthogonal polygon into rectangles (slabs),
 * the dual graph over those slabs, and the derived shape predicates
 * (x-monotone, path polygon, orthoconvex) plus the orthoconvex kernel.
 *
 * The decomposition is built by one sweep over the distinct x-coordinates of
 * vertical edges. The polygon cross-section just right of the sweep line is
 * kept as a set of disjoint y-intervals, each one the open slab it belongs to.
 * Crossing a vertical edge toggles membership of its y-range, and every
 * cross-section interval touched by a vertical edge (closed intersection) is
 * cut there. That is exactly the maximal inward extension of the edges at
 * reflex vertices, with vertically aligned cuts coalesced.
 */

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "owr/error.hpp"
#include "owr/point.hpp"
#include "owr/polygon.hpp"

namespace owr {

struct Slab {
  std::size_t index = 0;  // 1-based, left-to-right
  Coord x_left = 0;
  Coord x_right = 0;
  Coord l = 0;  // lower y
  Coord u = 0;  // upper y
  std::size_t upper_edge = 0;  // polygon edge containing the top side
  std::size_t lower_edge = 0;  // polygon edge containing the bottom side

  Area2 twice_area() const { return 2 * static_cast<Area2>(x_right - x_left) * (u - l); }
  friend bool operator==(const Slab&, const Slab&) = default;
};

enum class PolygonClass { Monotone, PathPolygon, Other };

constexpr std::string_view to_string(PolygonClass c) {
  switch (c) {
    case PolygonClass::Monotone: return "Monotone";
    case PolygonClass::PathPolygon: return "PathPolygon";
    case PolygonClass::Other: return "Other";
  }
  return "Other";
}

enum class Side { Left, Right };

struct Decomposition {
  std::vector<Slab> slabs;
  // adjacency[i] lists 0-based positions of the slabs sharing a vertical
  // boundary segment of positive length with slabs[i], ascending.
  std::vector<std::vector<std::size_t>> adjacency;
  PolygonClass classification = PolygonClass::Other;

  std::size_t size() const { return slabs.size(); }

  /// Which side of slab `of` the neighbor `neighbor` is attached to.
  Side side_of(std::size_t of, std::size_t neighbor) const {
    return slabs[neighbor].x_right == slabs[of].x_left ? Side::Left : Side::Right;
  }
};

namespace detail {

struct OpenSlab {
  Coord u;
  std::size_t id;
};

struct ClosedInterval {
  Coord l;
  Coord u;
  std::size_t id;
};

// Finds the horizontal edge at height y covering [x0, x1].
class HorizontalEdgeIndex {
 public:
  explicit HorizontalEdgeIndex(const OrthoPolygon& poly) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Edge e = poly.edge(i);
      if (e.horizontal()) entries_.push_back({e.from.y, std::min(e.from.x, e.to.x), std::max(e.from.x, e.to.x), i});
    }
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
      return a.y != b.y ? a.y < b.y : a.x0 < b.x0;
    });
  }

  std::size_t find(Coord y, Coord x0, Coord x1) const {
    auto it = std::upper_bound(entries_.begin(), entries_.end(), std::pair{y, x0},
                               [](const std::pair<Coord, Coord>& key, const Entry& e) {
                                 return key.first != e.y ? key.first < e.y : key.second < e.x0;
                               });
    if (it == entries_.begin()) throw std::logic_error("slab side not on a polygon edge");
    --it;
    if (it->y != y || it->x1 < x1) throw std::logic_error("slab side not on a polygon edge");
    return it->id;
  }

 private:
  struct Entry {
    Coord y;
    Coord x0;
    Coord x1;
    std::size_t id;
  };
  std::vector<Entry> entries_;
};

}  // namespace detail

inline PolygonClass classify(const Decomposition& d);

inline Decomposition vertical_decomposition(const OrthoPolygon& poly) {
  struct VEdge {
    Coord x;
    Coord lo;
    Coord hi;
  };
  std::vector<VEdge> vedges;
  vedges.reserve(poly.size() / 2);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Edge e = poly.edge(i);
    if (e.vertical()) vedges.push_back({e.from.x, std::min(e.from.y, e.to.y), std::max(e.from.y, e.to.y)});
  }
  std::sort(vedges.begin(), vedges.end(), [](const VEdge& a, const VEdge& b) {
    return a.x != b.x ? a.x < b.x : a.lo < b.lo;
  });

  struct RawSlab {
    Coord x_left, x_right, l, u;
  };
  std::vector<RawSlab> raw;
  raw.reserve(poly.size() / 2);
  std::vector<std::pair<std::size_t, std::size_t>> links;

  std::map<Coord, detail::OpenSlab> open;  // keyed by lower y
  std::vector<detail::ClosedInterval> removed;
  std::vector<detail::ClosedInterval> created;
  std::vector<Coord> toggles;
  std::size_t next_id = 0;

  for (std::size_t first = 0; first < vedges.size();) {
    const Coord x = vedges[first].x;
    std::size_t last = first;
    while (last < vedges.size() && vedges[last].x == x) ++last;

    removed.clear();
    created.clear();
    toggles.clear();
    for (std::size_t k = first; k < last; ++k) {
      const VEdge& e = vedges[k];
      toggles.push_back(e.lo);
      toggles.push_back(e.hi);
      auto it = open.upper_bound(e.hi);
      while (it != open.begin()) {
        auto prev = std::prev(it);
        if (prev->second.u < e.lo) break;
        removed.push_back({prev->first, prev->second.u, prev->second.id});
        open.erase(prev);
      }
    }
    for (const auto& r : removed) {
      raw[r.id].x_right = x;
      toggles.push_back(r.l);
      toggles.push_back(r.u);
    }
    std::sort(toggles.begin(), toggles.end());
    std::vector<Coord> bounds;
    for (std::size_t k = 0; k < toggles.size();) {
      std::size_t run = k;
      while (run < toggles.size() && toggles[run] == toggles[k]) ++run;
      if ((run - k) % 2 == 1) bounds.push_back(toggles[k]);
      k = run;
    }
    if (bounds.size() % 2 != 0) throw std::logic_error("cross-section parity broken");
    for (std::size_t k = 0; k < bounds.size(); k += 2) {
      const std::size_t id = next_id++;
      raw.push_back({x, x, bounds[k], bounds[k + 1]});
      open.emplace(bounds[k], detail::OpenSlab{bounds[k + 1], id});
      created.push_back({bounds[k], bounds[k + 1], id});
    }

    std::sort(removed.begin(), removed.end(), [](const auto& a, const auto& b) { return a.l < b.l; });
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < removed.size() && b < created.size()) {
      const Coord lo = std::max(removed[a].l, created[b].l);
      const Coord hi = std::min(removed[a].u, created[b].u);
      if (lo < hi) links.emplace_back(removed[a].id, created[b].id);
      if (removed[a].u < created[b].u) {
        ++a;
      } else {
        ++b;
      }
    }
    first = last;
  }
  if (!open.empty()) throw std::logic_error("sweep ended with open slabs");

  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    return raw[p].x_left != raw[q].x_left ? raw[p].x_left < raw[q].x_left : raw[p].l < raw[q].l;
  });
  std::vector<std::size_t> position(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  const detail::HorizontalEdgeIndex hindex(poly);
  Decomposition d;
  d.slabs.reserve(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const RawSlab& r = raw[order[i]];
    Slab s;
    s.index = i + 1;
    s.x_left = r.x_left;
    s.x_right = r.x_right;
    s.l = r.l;
    s.u = r.u;
    s.upper_edge = hindex.find(r.u, r.x_left, r.x_right);
    s.lower_edge = hindex.find(r.l, r.x_left, r.x_right);
    d.slabs.push_back(s);
  }
  d.adjacency.assign(raw.size(), {});
  for (const auto& [p, q] : links) {
    d.adjacency[position[p]].push_back(position[q]);
    d.adjacency[position[q]].push_back(position[p]);
  }
  for (auto& adj : d.adjacency) std::sort(adj.begin(), adj.end());
  d.classification = classify(d);
  return d;
}

/// Monotone: the dual graph is the index-ordered path with every slab's
/// neighbors on opposite sides. PathPolygon: the dual graph is a path.
inline PolygonClass classify(const Decomposition& d) {
  const std::size_t m = d.size();
  bool path = true;
  for (const auto& adj : d.adjacency) {
    if (adj.size() > 2) path = false;
  }
  if (!path) return PolygonClass::Other;

  bool ordered = true;
  for (std::size_t i = 0; i + 1 < m && ordered; ++i) {
    const auto& adj = d.adjacency[i];
    ordered = std::find(adj.begin(), adj.end(), i + 1) != adj.end() &&
              d.slabs[i].x_right == d.slabs[i + 1].x_left;
  }
  if (ordered) {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t expected = (i > 0 ? 1 : 0) + (i + 1 < m ? 1 : 0);
      if (d.adjacency[i].size() != expected) ordered = false;
    }
  }
  return ordered ? PolygonClass::Monotone : PolygonClass::PathPolygon;
}

inline bool is_x_monotone(const OrthoPolygon& poly) {
  return vertical_decomposition(poly).classification == PolygonClass::Monotone;
}

inline bool is_orthoconvex(const OrthoPolygon& poly) {
  return is_x_monotone(poly) && is_x_monotone(transposed(poly));
}

struct KernelRect {
  Coord x_low = 0;
  Coord x_high = 0;
  Coord y_low = 0;
  Coord y_high = 0;

  bool contains(Point p) const { return p.x >= x_low && p.x <= x_high && p.y >= y_low && p.y <= y_high; }
  friend bool operator==(const KernelRect&, const KernelRect&) = default;
};

/// Kernel of an orthoconvex polygon: the intersection of the inner half-planes
/// of all edges. Only the edges at reflex corners can cut into the polygon;
/// the remaining ones clip to the bounding box. Empty when the polygon has no
/// point seeing all of it.
inline std::optional<KernelRect> orthoconvex_kernel(const OrthoPolygon& poly) {
  if (!is_orthoconvex(poly)) throw Error(ErrorCode::NotOrthoconvex, "kernel requires an orthoconvex polygon");
  KernelRect k{-kMaxCoord - 1, kMaxCoord + 1, -kMaxCoord - 1, kMaxCoord + 1};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Edge e = poly.edge(i);
    // Interior lies to the left of each counter-clockwise edge.
    if (e.horizontal()) {
      if (e.to.x > e.from.x) {
        k.y_low = std::max(k.y_low, e.from.y);
      } else {
        k.y_high = std::min(k.y_high, e.from.y);
      }
    } else {
      if (e.to.y > e.from.y) {
        k.x_high = std::min(k.x_high, e.from.x);
      } else {
        k.x_low = std::max(k.x_low, e.from.x);
      }
    }
  }
  if (k.x_low > k.x_high || k.y_low > k.y_high) return std::nullopt;
  return k;
}

}  // namespace owr
