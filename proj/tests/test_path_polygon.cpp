#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace owr;

namespace {

std::vector<ElementKind> kinds(const PiecePlan& p) {
  std::vector<ElementKind> k;
  for (const auto& e : p.elements) k.push_back(e.kind);
  return k;
}

constexpr ElementKind kPiece = ElementKind::MonotonePiece;
constexpr ElementKind kReflex = ElementKind::ReflexRect;

void expect_plan_invariants(const Decomposition& d, const PiecePlan& plan) {
  // Elements partition the dual path in order.
  std::vector<std::size_t> flat;
  for (const auto& e : plan.elements) flat.insert(flat.end(), e.slabs.begin(), e.slabs.end());
  EXPECT_EQ(flat, plan.path_order);
  std::vector<std::size_t> sorted = flat;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
  // Consecutive path slabs are dual neighbors.
  for (std::size_t i = 0; i + 1 < flat.size(); ++i) {
    const auto& adj = d.adjacency[flat[i]];
    EXPECT_TRUE(std::find(adj.begin(), adj.end(), flat[i + 1]) != adj.end());
  }
  for (std::size_t e = 0; e < plan.elements.size(); ++e) {
    const auto& el = plan.elements[e];
    if (el.kind == kReflex) {
      ASSERT_EQ(el.slabs.size(), 1u);
      EXPECT_TRUE(is_reflex_rectangle(d, el.slabs[0]));
      continue;
    }
    if (e > 0) { EXPECT_EQ(plan.elements[e - 1].kind, kReflex); }
    for (std::size_t s : el.slabs) EXPECT_FALSE(is_reflex_rectangle(d, s));
    // A piece is x-monotone: its slabs advance in one x direction.
    for (std::size_t i = 0; i + 1 < el.slabs.size(); ++i) {
      const Slab& a = d.slabs[el.slabs[i]];
      const Slab& b = d.slabs[el.slabs[i + 1]];
      const bool forward = d.slabs[el.slabs[0]].x_right == d.slabs[el.slabs[1]].x_left;
      EXPECT_EQ(forward ? a.x_right : a.x_left, forward ? b.x_left : b.x_right);
    }
    EXPECT_EQ(vertical_decomposition(element_polygon(d, el)).classification, PolygonClass::Monotone);
  }
}

void expect_good_route(const OrthoPolygon& p, const Route& r) {
  for (const Segment& s : route_segments(r)) EXPECT_TRUE(segment_inside(p, s.a, s.b));
  EXPECT_TRUE(coverage_check(p, r).full());
}

}  // namespace

TEST(PathPlan, MonotoneHasNoReflexRectangles) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto d = vertical_decomposition(generate({seed, 30, 100, PolygonKind::Monotone}));
    EXPECT_TRUE(find_reflex_rectangles(d).empty());
    const auto plan = split_pieces(d);
    EXPECT_EQ(kinds(plan), (std::vector<ElementKind>{kPiece}));
  }
}

TEST(PathPlan, MonotoneRouteMatchesMonotoneSolver) {
  const auto p = generate({5, 24, 100, PolygonKind::Monotone});
  EXPECT_EQ(solve_path_polygon(p, TrimMode::Safe), solve_monotone(p, TrimMode::Safe));
}

TEST(PathPlan, SidewaysU) {
  const auto p = fixtures::sideways_u();
  const auto d = vertical_decomposition(p);
  EXPECT_EQ(find_reflex_rectangles(d).size(), 1u);
  const auto sol = solve_path_polygon_detailed(p, TrimMode::Safe);
  EXPECT_EQ(kinds(sol.plan), (std::vector<ElementKind>{kPiece, kReflex, kPiece}));
  expect_plan_invariants(d, sol.plan);
  // Two horizontal aligns joined by one vertical run at the reflex rectangle's attachment side.
  const auto segs = route_segments(sol.route);
  ASSERT_EQ(segs.size(), 3u);
  EXPECT_EQ(segs[0].a.y, segs[0].b.y);
  EXPECT_EQ(segs[1].a.x, 2);
  EXPECT_EQ(segs[1].b.x, 2);
  EXPECT_EQ(segs[2].a.y, segs[2].b.y);
  expect_good_route(p, sol.route);
}

TEST(PathPlan, TightSpiral) {
  const auto p = fixtures::tight_spiral();
  const auto d = vertical_decomposition(p);
  EXPECT_EQ(find_reflex_rectangles(d).size(), 2u);
  const auto sol = solve_path_polygon_detailed(p, TrimMode::Safe);
  EXPECT_EQ(kinds(sol.plan), (std::vector<ElementKind>{kPiece, kReflex, kReflex, kPiece}));
  expect_plan_invariants(d, sol.plan);
  // The junction run touches both reflex rectangles' y-ranges.
  bool spans = false;
  for (const Segment& s : route_segments(sol.route)) {
    if (s.a.x == s.b.x && std::min(s.a.y, s.b.y) <= 2 && std::max(s.a.y, s.b.y) >= 8) spans = true;
  }
  EXPECT_TRUE(spans);
  expect_good_route(p, sol.route);
}

TEST(PathPlan, DoubleSpiral) {
  const auto p = fixtures::double_spiral();
  const auto d = vertical_decomposition(p);
  EXPECT_EQ(find_reflex_rectangles(d).size(), 2u);
  const auto sol = solve_path_polygon_detailed(p, TrimMode::Safe);
  EXPECT_EQ(kinds(sol.plan), (std::vector<ElementKind>{kPiece, kReflex, kPiece, kReflex, kPiece}));
  expect_plan_invariants(d, sol.plan);
  expect_good_route(p, sol.route);
}

TEST(PathPlan, BranchingRejected) {
  const auto comb = validate_polygon(
      {{0, 0}, {6, 0}, {6, 1}, {2, 1}, {2, 2}, {6, 2}, {6, 3}, {2, 3}, {2, 4}, {6, 4}, {6, 5}, {0, 5}});
  try {
    solve(comb, TrimMode::Safe);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DualGraphNotPath);
  }
}

TEST(PathPlan, GeneratedPathPolygons) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto p = generate({seed, 10 + 2 * (seed % 20), 100, PolygonKind::Path});
    const auto sol = solve_path_polygon_detailed(p, TrimMode::Safe);
    ASSERT_EQ(sol.decomposition.classification, PolygonClass::PathPolygon);
    expect_plan_invariants(sol.decomposition, sol.plan);
    expect_good_route(p, sol.route);
  }
}
