#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace owr;

namespace {

Area2 total_twice_area(const Decomposition& d) {
  Area2 a = 0;
  for (const Slab& s : d.slabs) a += s.twice_area();
  return a;
}

// Pairwise adjacency from geometry alone.
std::vector<std::vector<std::size_t>> brute_adjacency(const Decomposition& d) {
  std::vector<std::vector<std::size_t>> adj(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      const Slab& a = d.slabs[i];
      const Slab& b = d.slabs[j];
      const bool touch = a.x_right == b.x_left || a.x_left == b.x_right;
      if (i != j && touch && std::min(a.u, b.u) > std::max(a.l, b.l)) adj[i].push_back(j);
    }
  }
  return adj;
}

void expect_tiling(const OrthoPolygon& p, const Decomposition& d) {
  EXPECT_EQ(total_twice_area(d), p.twice_area());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Slab& a = d.slabs[i];
      const Slab& b = d.slabs[j];
      const bool overlap = std::min(a.x_right, b.x_right) > std::max(a.x_left, b.x_left) &&
                           std::min(a.u, b.u) > std::max(a.l, b.l);
      EXPECT_FALSE(overlap) << "slabs " << i << " and " << j;
    }
  }
  EXPECT_EQ(d.adjacency, brute_adjacency(d));
}

}  // namespace

TEST(Decompose, RectangleIsOneSlab) {
  const auto d = vertical_decomposition(fixtures::rectangle());
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.slabs[0].x_left, 0);
  EXPECT_EQ(d.slabs[0].x_right, 4);
  EXPECT_EQ(d.classification, PolygonClass::Monotone);
}

TEST(Decompose, LShapeSlabs) {
  const auto p = fixtures::l_shape();
  const auto d = vertical_decomposition(p);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.slabs[0].index, 1u);
  EXPECT_EQ(d.slabs[0].x_left, 0);
  EXPECT_EQ(d.slabs[0].x_right, 2);
  EXPECT_EQ(d.slabs[0].l, 0);
  EXPECT_EQ(d.slabs[0].u, 3);
  EXPECT_EQ(d.slabs[1].x_left, 2);
  EXPECT_EQ(d.slabs[1].x_right, 4);
  EXPECT_EQ(d.slabs[1].l, 0);
  EXPECT_EQ(d.slabs[1].u, 2);
  EXPECT_EQ(total_twice_area(d), 20);  // area 10
  expect_tiling(p, d);
}

TEST(Decompose, GeneralPositionTenVerticesGiveFourSlabs) {
  const auto d = vertical_decomposition(generate({3, 10, 100, PolygonKind::Monotone}));
  EXPECT_EQ(d.size(), 4u);
}

TEST(Decompose, PlusSignCoalescesCuts) {
  const auto d = vertical_decomposition(fixtures::plus_sign());
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.classification, PolygonClass::Monotone);
  EXPECT_EQ(d.slabs[1].l, 0);
  EXPECT_EQ(d.slabs[1].u, 3);
}

TEST(Classify, Shapes) {
  EXPECT_EQ(vertical_decomposition(fixtures::l_shape()).classification, PolygonClass::Monotone);
  // Upright arms split by vertical cuts stay x-monotone.
  EXPECT_EQ(vertical_decomposition(fixtures::u_shape()).classification, PolygonClass::Monotone);
  EXPECT_EQ(vertical_decomposition(fixtures::sideways_u()).classification, PolygonClass::PathPolygon);
  EXPECT_EQ(vertical_decomposition(fixtures::tight_spiral()).classification, PolygonClass::PathPolygon);
  const auto comb = validate_polygon(
      {{0, 0}, {6, 0}, {6, 1}, {2, 1}, {2, 2}, {6, 2}, {6, 3}, {2, 3}, {2, 4}, {6, 4}, {6, 5}, {0, 5}});
  EXPECT_EQ(vertical_decomposition(comb).classification, PolygonClass::Other);
}

TEST(Classify, SidewaysUSlabSides) {
  const auto d = vertical_decomposition(fixtures::sideways_u());
  ASSERT_EQ(d.size(), 3u);
  ASSERT_EQ(d.adjacency[0].size(), 2u);
  EXPECT_EQ(d.side_of(0, d.adjacency[0][0]), Side::Right);
  EXPECT_EQ(d.side_of(0, d.adjacency[0][1]), Side::Right);
}

TEST(Orthoconvex, Shapes) {
  EXPECT_TRUE(is_orthoconvex(fixtures::rectangle()));
  EXPECT_TRUE(is_orthoconvex(fixtures::l_shape()));
  EXPECT_TRUE(is_orthoconvex(fixtures::plus_sign()));
  EXPECT_TRUE(is_x_monotone(fixtures::u_shape()));
  EXPECT_FALSE(is_orthoconvex(fixtures::u_shape()));
  // Upper chain descends then ascends.
  const auto s = validate_polygon({{0, 0}, {6, 0}, {6, 4}, {4, 4}, {4, 2}, {2, 2}, {2, 4}, {0, 4}});
  EXPECT_FALSE(is_orthoconvex(s));
}

TEST(Kernel, Fixtures) {
  EXPECT_EQ(orthoconvex_kernel(fixtures::rectangle()), (KernelRect{0, 4, 0, 2}));
  EXPECT_EQ(orthoconvex_kernel(fixtures::l_shape()), (KernelRect{0, 2, 0, 2}));
  EXPECT_EQ(orthoconvex_kernel(fixtures::plus_sign()), (KernelRect{1, 2, 1, 2}));
  EXPECT_THROW(orthoconvex_kernel(fixtures::u_shape()), Error);
}

// A point is in the kernel iff it sees every vertex and edge midpoint.
TEST(Kernel, MatchesVisibilityBruteForce) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto p = generate({seed, 8 + 2 * (seed % 4), 16, PolygonKind::Orthoconvex});
    std::vector<RPoint> targets;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Edge e = p.edge(i);
      targets.emplace_back(e.from);
      targets.emplace_back(Rational(e.from.x + e.to.x, 2), Rational(e.from.y + e.to.y, 2));
    }
    const auto k = orthoconvex_kernel(p);
    for (Coord x2 = 0; x2 <= 32; ++x2) {
      for (Coord y2 = 0; y2 <= 32; ++y2) {
        const RPoint q(Rational(x2, 2), Rational(y2, 2));
        if (!segment_inside(p, q, q)) continue;
        const bool all = std::all_of(targets.begin(), targets.end(), [&](const RPoint& t) { return segment_inside(p, q, t); });
        const bool in_k = k && Rational(k->x_low) <= q.x && q.x <= Rational(k->x_high) && Rational(k->y_low) <= q.y &&
                          q.y <= Rational(k->y_high);
        ASSERT_EQ(all, in_k) << "seed " << seed << " at " << q.x.str() << "," << q.y.str();
      }
    }
  }
}

TEST(Decompose, PropertiesOnGeneratedPolygons) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    for (PolygonKind k : {PolygonKind::Monotone, PolygonKind::Orthoconvex, PolygonKind::Path}) {
      const std::size_t n = 10 + 2 * (seed % 15);
      const auto p = generate({seed, n, 100, k});
      const auto d = vertical_decomposition(p);
      expect_tiling(p, d);
      if (k != PolygonKind::Path) {
        EXPECT_EQ(d.size(), (n - 2) / 2);
        EXPECT_EQ(d.classification, PolygonClass::Monotone);
      } else {
        EXPECT_EQ(d.classification, PolygonClass::PathPolygon);
      }
    }
  }
}

TEST(Decompose, TransposeInvariantArea) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto p = generate({seed, 20, 60, PolygonKind::Monotone});
    const auto t = transposed(p);
    EXPECT_EQ(total_twice_area(vertical_decomposition(t)), p.twice_area());
  }
}
