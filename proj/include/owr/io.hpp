#pragma once
// JSON encodings of polygons, decompositions, groups, routes and coverage reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "owr/balanced.hpp"
#include "owr/decomposition.hpp"
#include "owr/error.hpp"
#include "owr/oracle.hpp"
#include "owr/path_polygon.hpp"
#include "owr/polygon.hpp"
#include "owr/route.hpp"

namespace owr::io {

using json = nlohmann::ordered_json;

inline json point_json(Point p) { return json::array({p.x, p.y}); }

inline json polygon_json(const OrthoPolygon& p) {
  json v = json::array();
  for (const Point& q : p.vertices()) v.push_back(point_json(q));
  return {{"vertices", v}};
}

/// Parses `{"vertices": [[x,y], ...]}` and validates the result.
inline OrthoPolygon parse_polygon(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorCode::InvalidInput, "expected an object with a \"vertices\" array");
  }
  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      throw Error(ErrorCode::InvalidInput, "each vertex must be an [x, y] pair of integers");
    }
    pts.push_back({v[0].get<Coord>(), v[1].get<Coord>()});
  }
  return validate_polygon(std::move(pts));
}

inline OrthoPolygon parse_polygon(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, e.what());
  }
  return parse_polygon(j);
}

inline json decomposition_json(const Decomposition& d) {
  json slabs = json::array();
  for (const Slab& s : d.slabs) {
    slabs.push_back({{"i", s.index}, {"x", json::array({s.x_left, s.x_right})}, {"l", s.l}, {"u", s.u}});
  }
  return {{"slabs", slabs}, {"class", std::string(to_string(d.classification))}};
}

/// Group ranges are 1-based slab indices.
inline json groups_json(const std::vector<BalancedGroup>& groups) {
  json g = json::array();
  for (const BalancedGroup& b : groups) {
    g.push_back({{"range", json::array({b.first + 1, b.last + 1})}, {"m", b.m}, {"M", b.M}});
  }
  return {{"groups", g}};
}

inline json route_json(const Route& r) {
  const RouteMetrics m = route_metrics(r);
  json pts = json::array();
  for (const Point& p : r.points) pts.push_back(point_json(p));
  return {{"points", pts}, {"bends", m.bends}, {"length", m.length}, {"trim", std::string(to_string(r.trim))}};
}

inline json route_json(const PathSolution& s) {
  json j = route_json(s.route);
  json pieces = json::array();
  for (const PlanElement& e : s.plan.elements) {
    json ids = json::array();
    for (std::size_t p : e.slabs) ids.push_back(s.decomposition.slabs[p].index);
    pieces.push_back({{"kind", std::string(to_string(e.kind))}, {"slabs", ids}});
  }
  j["pieces"] = pieces;
  return j;
}

inline Route parse_route(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw Error(ErrorCode::InvalidInput, "expected an object with a \"points\" array");
  }
  Route r;
  for (const auto& v : j["points"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      throw Error(ErrorCode::InvalidInput, "each route point must be an [x, y] pair of integers");
    }
    r.points.push_back({v[0].get<Coord>(), v[1].get<Coord>()});
  }
  if (j.contains("trim") && j["trim"].is_string()) r.trim = parse_trim_mode(j["trim"].get<std::string>());
  for (std::size_t i = 1; i < r.points.size(); ++i) {
    if (r.points[i].x != r.points[i - 1].x && r.points[i].y != r.points[i - 1].y) {
      throw Error(ErrorCode::InvalidInput, "route segments must be axis-parallel", i);
    }
  }
  return r;
}

inline json coverage_json(const CoverageReport& c) {
  json un = json::array();
  for (const RPoint& p : c.uncovered) un.push_back(json::array({p.x.str(), p.y.str()}));
  return {{"step", c.step.str()},
          {"samples_total", c.samples_total},
          {"samples_covered", c.samples_covered},
          {"full", c.full()},
          {"uncovered", un}};
}

}  // namespace owr::io
