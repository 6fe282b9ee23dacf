#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "fixtures.hpp"

using namespace owr;

namespace {

std::vector<Slab> chain(const std::vector<Coord>& u, const std::vector<Coord>& l) {
  std::vector<Slab> s;
  for (std::size_t i = 0; i < u.size(); ++i) s.push_back(fixtures::slab(i + 1, 2 * i, 2 * i + 2, l[i], u[i]));
  return s;
}

// Fewest groups over all partitions into runs with min u >= max l.
std::size_t min_groups(std::span<const Slab> s) {
  const std::size_t m = s.size();
  std::vector<std::size_t> best(m + 1, std::numeric_limits<std::size_t>::max());
  best[0] = 0;
  for (std::size_t end = 1; end <= m; ++end) {
    Coord lo = std::numeric_limits<Coord>::min();
    Coord hi = std::numeric_limits<Coord>::max();
    for (std::size_t start = end; start-- > 0;) {
      lo = std::max(lo, s[start].l);
      hi = std::min(hi, s[start].u);
      if (hi < lo) break;
      best[end] = std::min(best[end], best[start] + 1);
    }
  }
  return best[m];
}

}  // namespace

TEST(Balanced, LShapeIsOneGroup) {
  const auto g = decompose_balanced(vertical_decomposition(fixtures::l_shape()));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].M, 2);
  EXPECT_EQ(g[0].m, 0);
  EXPECT_EQ(group_corridor(g[0]), (std::pair<Coord, Coord>{0, 2}));
}

TEST(Balanced, HandTrace) {
  const auto s = chain({2, 3, 2, 4}, {0, 1, 1, 3});
  const auto g = decompose_balanced(std::span<const Slab>(s));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].first, 0u);
  EXPECT_EQ(g[0].last, 2u);
  EXPECT_EQ(g[0].M, 2);
  EXPECT_EQ(g[0].m, 1);
  EXPECT_EQ(g[1].first, 3u);
  EXPECT_EQ(g[1].last, 3u);
  EXPECT_EQ(group_corridor(g[1]), (std::pair<Coord, Coord>{3, 4}));
}

TEST(Balanced, RectangleIsItsSlab) {
  const auto g = decompose_balanced(vertical_decomposition(fixtures::rectangle()));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(group_corridor(g[0]), (std::pair<Coord, Coord>{0, 2}));
  EXPECT_EQ(g[0].x_left, 0);
  EXPECT_EQ(g[0].x_right, 4);
}

TEST(Balanced, NonMonotoneRejected) {
  try {
    decompose_balanced(vertical_decomposition(fixtures::sideways_u()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMonotone);
  }
}

TEST(Balanced, TouchingCorridorStaysInGroup) {
  // min u equals max l: a zero-height corridor still admits an align.
  const auto s = chain({2, 5}, {0, 2});
  EXPECT_EQ(decompose_balanced(std::span<const Slab>(s)).size(), 1u);
}

TEST(Balanced, GroupsArePartitionValidMaximalAndFewest) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto kind = seed % 3 == 0 ? PolygonKind::Balanced : PolygonKind::Monotone;
    const auto p = generate({seed, 10 + 2 * (seed % 25), 100, kind});
    const auto d = vertical_decomposition(p);
    const auto g = decompose_balanced(d);
    ASSERT_FALSE(g.empty());
    EXPECT_EQ(g.front().first, 0u);
    EXPECT_EQ(g.back().last, d.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i > 0) { EXPECT_EQ(g[i].first, g[i - 1].last + 1); }
      Coord lo = std::numeric_limits<Coord>::min();
      Coord hi = std::numeric_limits<Coord>::max();
      for (std::size_t s = g[i].first; s <= g[i].last; ++s) {
        lo = std::max(lo, d.slabs[s].l);
        hi = std::min(hi, d.slabs[s].u);
      }
      EXPECT_EQ(g[i].m, lo);
      EXPECT_EQ(g[i].M, hi);
      EXPECT_GE(g[i].M, g[i].m);
      if (i + 1 < g.size()) {
        const Slab& next = d.slabs[g[i].last + 1];
        EXPECT_LT(std::min(hi, next.u), std::max(lo, next.l)) << "group " << i << " could grow";
      }
      for (Coord y : {g[i].m, g[i].M}) {
        EXPECT_TRUE(segment_inside(p, Point{g[i].x_left, y}, Point{g[i].x_right, y})) << "seed " << seed;
      }
    }
    EXPECT_EQ(g.size(), min_groups(d.slabs));
    if (kind == PolygonKind::Balanced) { EXPECT_EQ(g.size(), 1u); }
  }
}
