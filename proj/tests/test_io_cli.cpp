#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"

using namespace owr;
using owr::io::json;

namespace {

std::string tmp(const std::string& name) { return ::testing::TempDir() + "owr_" + name; }

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args) {
  const std::string cmd = std::string(OWR_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Json, PolygonRoundTrip) {
  const auto p = fixtures::tight_spiral();
  const json j = io::polygon_json(p);
  EXPECT_EQ(io::parse_polygon(j.dump()), p);
  EXPECT_EQ(io::polygon_json(fixtures::rectangle()).dump(), R"({"vertices":[[0,0],[4,0],[4,2],[0,2]]})");
}

TEST(Json, ParseErrorsAreInvalidInput) {
  for (const char* text : {"{", R"({"v":[]})", R"({"vertices":[[0,0],[1]]})", R"({"vertices":[[0,0.5],[1,0],[1,1],[0,1]]})"}) {
    try {
      io::parse_polygon(std::string(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidInput) << text;
    }
  }
}

TEST(Json, DecompositionAndGroups) {
  const auto d = vertical_decomposition(fixtures::l_shape());
  EXPECT_EQ(io::decomposition_json(d).dump(),
            R"({"slabs":[{"i":1,"x":[0,2],"l":0,"u":3},{"i":2,"x":[2,4],"l":0,"u":2}],"class":"Monotone"})");
  EXPECT_EQ(io::groups_json(decompose_balanced(d)).dump(), R"({"groups":[{"range":[1,2],"m":0,"M":2}]})");
}

TEST(Json, Route) {
  const json j = io::route_json(solve_monotone(fixtures::l_shape(), TrimMode::Paper));
  EXPECT_EQ(j.dump(), R"({"points":[[2,0]],"bends":0,"length":0,"trim":"paper"})");
  EXPECT_EQ(io::parse_route(j).points, (std::vector<Point>{{2, 0}}));
  const json pj = io::route_json(solve_path_polygon_detailed(fixtures::sideways_u(), TrimMode::Safe));
  ASSERT_TRUE(pj.contains("pieces"));
  EXPECT_EQ(pj["pieces"].size(), 3u);
  EXPECT_EQ(pj["pieces"][1]["kind"], "reflex");
}

TEST(Svg, DeterministicAndFlipped) {
  const auto p = fixtures::l_shape();
  const Route r = solve_monotone(p, TrimMode::Safe);
  const std::string a = render_svg(p, r, {});
  EXPECT_EQ(a, render_svg(p, r, {}));
  EXPECT_NE(a.find("<svg"), std::string::npos);
  // (0,0) is the bottom-left corner: drawn at the largest pixel y.
  EXPECT_NE(a.find("10.00,70.00"), std::string::npos);
  EXPECT_NE(a.find("<polyline"), std::string::npos);
}

TEST(Cli, LShapeRouteAndCheck) {
  const std::string poly = tmp("l.json"), route = tmp("l_route.json"), rep = tmp("l_cov.json");
  write_file(poly, io::polygon_json(fixtures::l_shape()).dump());
  ASSERT_EQ(run("route " + poly + " --trim paper -o " + route), 0);
  const json j = json::parse(read_file(route));
  EXPECT_EQ(j["points"], json::parse("[[2,0]]"));
  EXPECT_EQ(j["bends"], 0);
  EXPECT_EQ(run("check " + poly + " --route " + route + " -o " + rep), 0);
  EXPECT_TRUE(json::parse(read_file(rep))["full"].get<bool>());

  write_file(route, R"({"points":[[0,3]]})");
  EXPECT_EQ(run("check " + poly + " --route " + route + " -o " + rep), 4);
}

TEST(Cli, ExitCodes) {
  const std::string poly = tmp("comb.json");
  write_file(poly, R"({"vertices":[[0,0],[6,0],[6,1],[2,1],[2,2],[6,2],[6,3],[2,3],[2,4],[6,4],[6,5],[0,5]]})");
  EXPECT_EQ(run("route " + poly + " -o " + tmp("comb_route.json")), 3);
  write_file(poly, R"({"vertices":[[0,0],[3,1],[3,2],[0,2]]})");
  EXPECT_EQ(run("route " + poly + " -o " + tmp("bad_route.json")), 2);
  EXPECT_EQ(run("gen --kind path --n 8 -o " + tmp("g.json")), 2);
  EXPECT_EQ(run("nosuchcommand"), 2);
}

TEST(Cli, ByteIdenticalOutputs) {
  const std::string g1 = tmp("g1.json"), g2 = tmp("g2.json");
  ASSERT_EQ(run("gen --kind path --n 30 --seed 9 -o " + g1), 0);
  ASSERT_EQ(run("gen --kind path --n 30 --seed 9 -o " + g2), 0);
  EXPECT_EQ(read_file(g1), read_file(g2));
  for (const std::string cmd : {"route", "decompose", "render"}) {
    const std::string o1 = tmp(cmd + "1"), o2 = tmp(cmd + "2");
    ASSERT_EQ(run(cmd + " " + g1 + " -o " + o1), 0) << cmd;
    ASSERT_EQ(run(cmd + " " + g1 + " -o " + o2), 0) << cmd;
    EXPECT_EQ(read_file(o1), read_file(o2)) << cmd;
  }
}

TEST(Cli, DecomposeTilesInput) {
  const std::string poly = tmp("m.json"), out = tmp("m_dec.json");
  ASSERT_EQ(run("gen --kind monotone --n 40 --seed 3 -o " + poly), 0);
  ASSERT_EQ(run("decompose " + poly + " -o " + out), 0);
  const auto p = io::parse_polygon(read_file(poly));
  const json d = json::parse(read_file(out));
  std::vector<Rect> rects;
  for (const auto& s : d["slabs"]) rects.push_back({s["x"][0], s["l"], s["x"][1], s["u"]});
  const auto rebuilt = polygon_from_rects(rects);
  std::vector<Point> a(rebuilt.vertices().begin(), rebuilt.vertices().end());
  std::vector<Point> b(p.vertices().begin(), p.vertices().end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  Area2 twice = 0;
  for (const Rect& r : rects) twice += 2 * static_cast<Area2>(r.x1 - r.x0) * (r.y1 - r.y0);
  EXPECT_EQ(twice, p.twice_area());
  EXPECT_TRUE(d.contains("groups"));
}
