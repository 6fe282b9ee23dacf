#pragma once
// Deterministic SVG 1.1 rendering. The y-axis is flipped so +y points up.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "owr/balanced.hpp"
#include "owr/decomposition.hpp"
#include "owr/error.hpp"
#include "owr/polygon.hpp"
#include "owr/route.hpp"

namespace owr {

struct RenderOptions {
  double scale = 20.0;  // pixels per unit
  bool slabs = true;
  bool groups = true;
  bool corridors = true;
  bool route = true;
  bool kernel = true;
};

namespace detail {

inline std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

/// Renders the polygon with the requested overlays. Group and corridor
/// layers are drawn only for x-monotone polygons, the kernel only for
/// orthoconvex ones.
inline std::string render_svg(const OrthoPolygon& poly, const std::optional<Route>& route, const RenderOptions& opt) {
  if (!(opt.scale > 0)) throw Error(ErrorCode::InvalidInput, "scale must be positive");
  Coord x0 = poly.vertex(0).x, x1 = x0, y0 = poly.vertex(0).y, y1 = y0;
  for (const Point& p : poly.vertices()) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double margin = 10.0;
  const double w = static_cast<double>(x1 - x0) * opt.scale + 2 * margin;
  const double h = static_cast<double>(y1 - y0) * opt.scale + 2 * margin;
  auto sx = [&](Coord x) { return detail::fixed(margin + static_cast<double>(x - x0) * opt.scale); };
  auto sy = [&](Coord y) { return detail::fixed(margin + static_cast<double>(y1 - y) * opt.scale); };
  auto rect = [&](Coord ax, Coord ay, Coord bx, Coord by, const std::string& style) {
    return "<rect x=\"" + sx(ax) + "\" y=\"" + sy(by) + "\" width=\"" + detail::fixed(static_cast<double>(bx - ax) * opt.scale) +
           "\" height=\"" + detail::fixed(static_cast<double>(by - ay) * opt.scale) + "\" " + style + "/>\n";
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fixed(w) + "\" height=\"" +
         detail::fixed(h) + "\">\n";

  out += "<polygon points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) out += ' ';
    out += sx(poly.vertex(i).x) + "," + sy(poly.vertex(i).y);
  }
  out += "\" fill=\"#f4f4f4\" stroke=\"#000000\" stroke-width=\"1.50\"/>\n";

  const Decomposition d = vertical_decomposition(poly);
  if (opt.groups && d.classification == PolygonClass::Monotone) {
    static const char* kFills[] = {"#cfe3f7", "#f7e1c8", "#d5efd0", "#ead5f2"};
    const auto groups = decompose_balanced(d);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      out += "<g class=\"group\">\n";
      for (std::size_t s = groups[g].first; s <= groups[g].last; ++s) {
        const Slab& sl = d.slabs[s];
        out += rect(sl.x_left, sl.l, sl.x_right, sl.u, std::string("fill=\"") + kFills[g % 4] + "\" stroke=\"none\"");
      }
      out += "</g>\n";
    }
    if (opt.corridors) {
      for (const BalancedGroup& g : groups) {
        out += rect(g.x_left, g.m, g.x_right, g.M, "fill=\"none\" stroke=\"#7a3ea8\" stroke-width=\"1.00\" stroke-dasharray=\"2,2\"");
      }
    }
  }
  if (opt.slabs) {
    for (const Slab& sl : d.slabs) {
      out += rect(sl.x_left, sl.l, sl.x_right, sl.u, "fill=\"none\" stroke=\"#888888\" stroke-width=\"0.75\" stroke-dasharray=\"4,3\"");
    }
  }
  if (opt.kernel && is_orthoconvex(poly)) {
    if (const auto k = orthoconvex_kernel(poly)) {
      out += rect(k->x_low, k->y_low, k->x_high, k->y_high, "fill=\"#2e8b57\" fill-opacity=\"0.25\" stroke=\"#2e8b57\" stroke-width=\"1.00\"");
    }
  }
  if (opt.route && route && !route->points.empty()) {
    if (route->points.size() == 1) {
      out += "<circle cx=\"" + sx(route->points[0].x) + "\" cy=\"" + sy(route->points[0].y) +
             "\" r=\"4.00\" fill=\"#d62728\"/>\n";
    } else {
      out += "<polyline points=\"";
      for (std::size_t i = 0; i < route->points.size(); ++i) {
        if (i) out += ' ';
        out += sx(route->points[i].x) + "," + sy(route->points[i].y);
      }
      out += "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2.50\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace owr
