#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vcvis/error.hpp"
#include "vcvis/raycast.hpp"
#include "vcvis/visibility.hpp"

using namespace vcvis;
using namespace vcvis::testing;

namespace {

// Comb-shaped polygon with non-axis-parallel teeth; exercises slanted edges.
SimplePolygon comb() {
  return validate_polygon({{0, 0}, {12, 0}, {12, 7}, {10, 7}, {9, 2}, {8, 8}, {6, 3},
                           {5, 9}, {3, 2}, {2, 7}, {0, 8}});
}

SimplePolygon spiral() {
  return validate_polygon({{0, 0}, {10, 0}, {10, 10}, {2, 10}, {2, 4}, {6, 4}, {6, 6},
                           {4, 6}, {4, 8}, {8, 8}, {8, 2}, {0, 2}});
}

ExactPoint random_inside(const SimplePolygon& poly, std::mt19937_64& rng) {
  Rational lo_x = poly[0].x, hi_x = poly[0].x, lo_y = poly[0].y, hi_y = poly[0].y;
  for (const auto& v : poly.vertices()) {
    lo_x = std::min(lo_x, v.x);
    hi_x = std::max(hi_x, v.x);
    lo_y = std::min(lo_y, v.y);
    hi_y = std::max(hi_y, v.y);
  }
  for (;;) {
    Rational fx = make_rational(static_cast<long>(rng() % 997) + 1, 999);
    Rational fy = make_rational(static_cast<long>(rng() % 997) + 1, 999);
    ExactPoint p{Rational(lo_x + fx * (hi_x - lo_x)), Rational(lo_y + fy * (hi_y - lo_y))};
    if (point_in_polygon(poly, p) == Containment::kInterior) return p;
  }
}

}  // namespace

TEST(L2Visible, Examples) {
  EXPECT_TRUE(l2_visible(unit_square(), pt("1/4", "1/4"), pt("3/4", "3/4")));
  EXPECT_FALSE(l2_visible(u4(), pt("1/2", "3"), pt("7/2", "3")));
  EXPECT_FALSE(l2_visible(u4(), pt("1/2", "3"), pt("2", "1/2")));
}

TEST(L2Visible, GrazingAndBoundaryRuns) {
  auto poly = u4();
  // Along the bottom of the notch: touches the boundary, never leaves.
  EXPECT_TRUE(l2_visible(poly, {0, 1}, {4, 1}));
  // Through the reflex corner (1,1) from the left arm into the corridor.
  EXPECT_TRUE(l2_visible(poly, pt("1/2", "3/2"), pt("3/2", "1/2")));
  EXPECT_TRUE(l2_visible(poly, {0, 0}, {4, 0}));
  EXPECT_FALSE(l2_visible(poly, {1, 4}, {3, 4}));
  EXPECT_THROW(l2_visible(poly, {2, 3}, {0, 0}), Error);
}

TEST(Geodesic, Examples) {
  auto poly = u4();
  EXPECT_EQ(geodesic(poly, pt("1/2", "3"), pt("7/2", "3")).points,
            (std::vector<ExactPoint>{pt("1/2", "3"), {1, 1}, {3, 1}, pt("7/2", "3")}));
  EXPECT_EQ(geodesic(poly, pt("1/2", "3"), pt("2", "1/2")).points,
            (std::vector<ExactPoint>{pt("1/2", "3"), {1, 1}, pt("2", "1/2")}));
  auto sq = unit_square();
  EXPECT_EQ(geodesic(sq, pt("1/5", "1/7"), pt("4/5", "6/7")).points,
            (std::vector<ExactPoint>{pt("1/5", "1/7"), pt("4/5", "6/7")}));
}

TEST(Geodesic, MatchesDijkstraOracle) {
  std::mt19937_64 rng(17);
  for (const auto& poly : {u4(), comb(), spiral()}) {
    GeodesicContext ctx(poly);
    for (int i = 0; i < 150; ++i) {
      ExactPoint p = random_inside(poly, rng);
      ExactPoint q = random_inside(poly, rng);
      auto fast = ctx.geodesic(p, q).points;
      auto slow = dijkstra_geodesic(poly, p, q);
      EXPECT_NEAR(path_length(fast), path_length(slow), 1e-9) << p << " " << q;
      EXPECT_EQ(fast.front(), p);
      EXPECT_EQ(fast.back(), q);
      for (std::size_t k = 1; k < fast.size(); ++k) {
        EXPECT_TRUE(l2_visible(poly, fast[k - 1], fast[k]));
      }
    }
  }
}

TEST(Geodesic, PathsThroughVertices) {
  auto poly = spiral();
  GeodesicContext ctx(poly);
  // Endpoints at polygon vertices and on edges.
  auto path = ctx.geodesic({0, 0}, {5, 5});
  EXPECT_NEAR(path_length(path.points), path_length(dijkstra_geodesic(poly, {0, 0}, {5, 5})),
              1e-9);
  path = ctx.geodesic({1, 0}, {4, 7});
  EXPECT_NEAR(path_length(path.points), path_length(dijkstra_geodesic(poly, {1, 0}, {4, 7})),
              1e-9);
}

TEST(IsXyMonotone, Examples) {
  EXPECT_TRUE(is_xy_monotone({{{0, 0}, {1, 2}, {3, 2}, {4, 5}}}));
  EXPECT_FALSE(is_xy_monotone({{pt("1/2", "3"), {1, 1}, {3, 1}, pt("7/2", "3")}}));
  EXPECT_TRUE(is_xy_monotone({{{2, 2}}}));
}

TEST(L1Visible, Examples) {
  auto poly = u4();
  EXPECT_TRUE(l1_visible(poly, pt("1/2", "3"), pt("2", "1/2")));
  EXPECT_FALSE(l1_visible(poly, pt("1/2", "3"), pt("7/2", "3")));
  EXPECT_TRUE(l1_visible(unit_square(), pt("1/9", "8/9"), pt("7/9", "1/9")));
}

TEST(Visibility, SymmetryReflexivityAndInclusion) {
  std::mt19937_64 rng(23);
  for (const auto& poly : {u4(), comb(), spiral()}) {
    GeodesicContext ctx(poly);
    for (int i = 0; i < 300; ++i) {
      ExactPoint p = random_inside(poly, rng);
      ExactPoint q = random_inside(poly, rng);
      bool l1 = l1_visible(ctx, p, q);
      bool l2 = l2_visible(poly, p, q);
      EXPECT_EQ(l1, l1_visible(ctx, q, p));
      EXPECT_EQ(l2, l2_visible(poly, q, p));
      if (l2) EXPECT_TRUE(l1) << p << " " << q;
      EXPECT_TRUE(l1_visible(ctx, p, p));
      EXPECT_TRUE(l2_visible(poly, p, p));
    }
  }
}

TEST(Raycast, ExtendInsideContinuesThroughGrazedVertex) {
  auto poly = u4();
  EXPECT_EQ(first_contact(poly, pt("1/2", "1"), {1, 0}), ExactPoint(1, 1));
  EXPECT_EQ(extend_inside(poly, pt("1/2", "1"), {1, 0}), ExactPoint(1, 1));
  EXPECT_EQ(extend_inside(poly, {0, 1}, {1, 0}), ExactPoint(1, 1));
  EXPECT_EQ(extend_inside(poly, {0, 0}, {1, 1}), ExactPoint(1, 1));
  auto sq = unit_square();
  EXPECT_EQ(first_contact(sq, {1, 0}, {1, 0}), ExactPoint(1, 0));
  // Running along an edge never enters the interior.
  EXPECT_EQ(first_contact(sq, {0, 0}, {1, 0}), ExactPoint(0, 0));
}

TEST(L2VisibilityPolygon, ConvexIsWhole) {
  auto sq = unit_square();
  auto vis = l2_visibility_polygon(sq, pt("1/2", "1/2"));
  EXPECT_EQ(polygon_area(vis), Rational(1));
}

TEST(L2VisibilityPolygon, MembershipMatchesSegmentTest) {
  std::mt19937_64 rng(29);
  for (const auto& poly : {u4(), comb(), spiral()}) {
    for (int k = 0; k < 4; ++k) {
      ExactPoint p = random_inside(poly, rng);
      auto vis = l2_visibility_polygon(poly, p);
      EXPECT_LE(polygon_area(vis), polygon_area(poly));
      for (int i = 0; i < 250; ++i) {
        ExactPoint q = random_inside(poly, rng);
        auto where = point_in_polygon(vis, q);
        if (where == Containment::kBoundary) continue;
        EXPECT_EQ(where == Containment::kInterior, l2_visible(poly, p, q)) << p << " " << q;
      }
    }
  }
}

TEST(L2VisibilityPolygon, Errors) {
  auto poly = u4();
  try {
    l2_visibility_polygon(poly, {2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPointOutsidePolygon);
  }
  try {
    l2_visibility_polygon(poly, {2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPointOnBoundary);
  }
}
