// owr: command-line front end for orthogonal watchman routes.
//
// Exit codes: 0 success, 2 invalid input, 3 unsupported polygon class,
// 4 coverage failure, 5 internal invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "owr/owr.hpp"

namespace {

using owr::io::json;

constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitUncovered = 4;
constexpr int kExitInternal = 5;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw owr::Error(owr::ErrorCode::InvalidInput, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    throw owr::Error(owr::ErrorCode::InvalidInput, e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw owr::Error(owr::ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

int exit_code_for(owr::ErrorCode c) {
  switch (c) {
    case owr::ErrorCode::NotMonotone:
    case owr::ErrorCode::NotOrthoconvex:
    case owr::ErrorCode::DualGraphNotPath:
    case owr::ErrorCode::TooLarge:
      return kExitUnsupported;
    case owr::ErrorCode::LevelOutOfCorridor:
      return kExitInternal;
    default:
      return kExitInvalid;
  }
}

struct Options {
  std::string input = "-";
  std::string route_file;
  std::string out = "-";
  std::string trim = "safe";
  std::string step = "1/2";
  std::string kind = "monotone";
  std::uint64_t seed = 1;
  std::size_t n = 20;
  owr::Coord range = 0;
  bool degenerate = false;
  double scale = 20.0;
  std::string hide;
  std::vector<std::size_t> sizes{10000, 100000, 1000000};
  int repeats = 3;
};

int cmd_gen(const Options& o) {
  owr::GenParams p;
  p.seed = o.seed;
  p.n_target = o.n;
  p.coord_range = o.range > 0 ? o.range : std::max<owr::Coord>(100, 4 * static_cast<owr::Coord>(o.n));
  p.kind = owr::parse_polygon_kind(o.kind);
  p.general_position = !o.degenerate;
  write_output(o.out, dump(owr::io::polygon_json(owr::generate(p))));
  return 0;
}

int cmd_decompose(const Options& o) {
  const owr::OrthoPolygon poly = owr::io::parse_polygon(read_json(o.input));
  const owr::Decomposition d = owr::vertical_decomposition(poly);
  json j = owr::io::decomposition_json(d);
  if (d.classification == owr::PolygonClass::Monotone) j["groups"] = owr::io::groups_json(owr::decompose_balanced(d))["groups"];
  write_output(o.out, dump(j));
  return 0;
}

int cmd_route(const Options& o) {
  const owr::OrthoPolygon poly = owr::io::parse_polygon(read_json(o.input));
  const owr::TrimMode mode = owr::parse_trim_mode(o.trim);
  const owr::PathSolution sol = owr::solve_path_polygon_detailed(poly, mode);
  const json j = sol.decomposition.classification == owr::PolygonClass::Monotone ? owr::io::route_json(sol.route)
                                                                                 : owr::io::route_json(sol);
  write_output(o.out, dump(j));
  return 0;
}

int cmd_check(const Options& o) {
  const owr::OrthoPolygon poly = owr::io::parse_polygon(read_json(o.input));
  if (o.route_file.empty()) throw owr::Error(owr::ErrorCode::InvalidInput, "--route is required");
  const owr::Route route = owr::io::parse_route(read_json(o.route_file));
  owr::Rational step;
  try {
    step = owr::Rational::parse(o.step);
  } catch (const std::exception&) {
    throw owr::Error(owr::ErrorCode::InvalidInput, "cannot parse step " + o.step);
  }
  const owr::CoverageReport rep = owr::coverage_check(poly, route, step);
  write_output(o.out, dump(owr::io::coverage_json(rep)));
  return rep.full() ? 0 : kExitUncovered;
}

int cmd_render(const Options& o) {
  const owr::OrthoPolygon poly = owr::io::parse_polygon(read_json(o.input));
  std::optional<owr::Route> route;
  if (!o.route_file.empty()) route = owr::io::parse_route(read_json(o.route_file));
  owr::RenderOptions r;
  r.scale = o.scale;
  std::stringstream hidden(o.hide);
  for (std::string layer; std::getline(hidden, layer, ',');) {
    if (layer == "slabs") r.slabs = false;
    else if (layer == "groups") r.groups = false;
    else if (layer == "corridors") r.corridors = false;
    else if (layer == "route") r.route = false;
    else if (layer == "kernel") r.kernel = false;
    else if (!layer.empty()) throw owr::Error(owr::ErrorCode::InvalidInput, "unknown layer " + layer);
  }
  write_output(o.out, owr::render_svg(poly, route, r));
  return 0;
}

int cmd_bench(const Options& o) {
  json rows = json::array();
  for (std::size_t n : o.sizes) {
    owr::GenParams p;
    p.seed = o.seed;
    p.n_target = n;
    p.coord_range = 4 * static_cast<owr::Coord>(n);
    p.kind = owr::PolygonKind::Monotone;
    const owr::OrthoPolygon poly = owr::generate(p);
    double best = 0;
    owr::MonotoneSolution sol;
    for (int r = 0; r < std::max(1, o.repeats); ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      sol = owr::solve_monotone_detailed(poly, owr::TrimMode::Safe);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      best = r == 0 ? secs : std::min(best, secs);
    }
    const owr::RouteMetrics m = owr::route_metrics(sol.route);
    rows.push_back({{"n", n},
                    {"seconds", best},
                    {"slabs", sol.decomposition.size()},
                    {"groups", sol.groups.size()},
                    {"stitched_segments", owr::route_metrics(sol.stitched).segment_count},
                    {"route_segments", m.segment_count}});
  }
  json j = {{"bench", rows}};
  write_output(o.out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal watchman routes in monotone and path polygons"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* c) { c->add_option("-o,--out", o.out, "Output file (default stdout)"); };
  auto add_in = [&](CLI::App* c) { c->add_option("input", o.input, "Polygon JSON file (default stdin)"); };

  auto* gen = app.add_subcommand("gen", "Generate a random polygon");
  gen->add_option("--kind", o.kind, "monotone|orthoconvex|balanced|path")->check(CLI::IsMember({"monotone", "orthoconvex", "balanced", "path"}));
  gen->add_option("--n", o.n, "Vertex count (even, >= 4)");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--range", o.range, "Coordinate range (default max(100, 4n))");
  gen->add_flag("--degenerate", o.degenerate, "Allow slab boundaries where both chains change");
  add_out(gen);

  auto* dec = app.add_subcommand("decompose", "Vertical decomposition and balanced groups");
  add_in(dec);
  add_out(dec);

  auto* route = app.add_subcommand("route", "Compute a watchman route");
  add_in(route);
  route->add_option("--trim", o.trim, "paper|safe|off")->check(CLI::IsMember({"paper", "safe", "off"}));
  add_out(route);

  auto* check = app.add_subcommand("check", "Sampled coverage of a route");
  add_in(check);
  check->add_option("--route", o.route_file, "Route JSON file")->required();
  check->add_option("--step", o.step, "Sampling step, e.g. 1/2 or 0.25");
  add_out(check);

  auto* render = app.add_subcommand("render", "Render an SVG figure");
  add_in(render);
  render->add_option("--route", o.route_file, "Route JSON file to overlay");
  render->add_option("--scale", o.scale, "Pixels per unit")->check(CLI::PositiveNumber);
  render->add_option("--hide", o.hide, "Comma-separated layers to hide: slabs,groups,corridors,route,kernel");
  add_out(render);

  auto* bench = app.add_subcommand("bench", "Time the monotone pipeline at growing sizes");
  bench->add_option("--sizes", o.sizes, "Vertex counts");
  bench->add_option("--seed", o.seed, "Random seed");
  bench->add_option("--repeats", o.repeats, "Timed runs per size (best is reported)");
  add_out(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*dec) return cmd_decompose(o);
    if (*route) return cmd_route(o);
    if (*check) return cmd_check(o);
    if (*render) return cmd_render(o);
    if (*bench) return cmd_bench(o);
  } catch (const owr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
