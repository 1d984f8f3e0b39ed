#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "vcvis/cuts.hpp"
#include "vcvis/error.hpp"
#include "vcvis/visibility.hpp"

using namespace vcvis;
using namespace vcvis::testing;

namespace {

// One spike hanging down from the top edge, tip at (3,2).
SimplePolygon spike() {
  return validate_polygon({{0, 0}, {7, 0}, {7, 5}, {4, 5}, {3, 2}, pt("5/2", "5"), {0, 5}});
}

}  // namespace

TEST(ExtremalFeatures, UnitSquareHasFourEdges) {
  auto features = extremal_features(unit_square());
  ASSERT_EQ(features.size(), 4u);
  for (const auto& f : features) EXPECT_EQ(f.type, EvokingFeature::Type::kEdge);
}

TEST(ExtremalFeatures, U4NotchBottom) {
  auto poly = u4();
  auto features = extremal_features(poly);
  bool found = false;
  for (const auto& f : features) {
    if (f.type == EvokingFeature::Type::kEdge && f.index == 4 && f.last_index == 5) {
      EXPECT_EQ(f.kind, ExtremumKind::kYMin);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(ExtremalFeatures, ConvexGeneralPositionHasFourVertices) {
  auto poly = validate_polygon({{0, 1}, {3, 0}, {5, 2}, {4, 5}, {1, 4}});
  auto features = extremal_features(poly);
  ASSERT_EQ(features.size(), 4u);
  for (const auto& f : features) EXPECT_EQ(f.type, EvokingFeature::Type::kVertex);
}

TEST(RayShoot, Examples) {
  EXPECT_EQ(ray_shoot(unit_square(), pt("1/2", "1/2"), AxisDirection::kPlusX), pt("1", "1/2"));
  EXPECT_EQ(ray_shoot(u4(), {1, 1}, AxisDirection::kMinusX), ExactPoint(0, 1));
  EXPECT_EQ(ray_shoot(u4(), {3, 1}, AxisDirection::kPlusX), ExactPoint(4, 1));
}

TEST(ExtractCuts, ConvexHasNone) {
  EXPECT_TRUE(extract_cuts(unit_square()).empty());
}

TEST(ExtractCuts, U4SingleNorthCut) {
  auto cuts = extract_cuts(u4());
  ASSERT_EQ(cuts.size(), 1u);
  const auto& c = cuts[0];
  EXPECT_EQ(c.axis, Axis::kHorizontal);
  EXPECT_EQ(c.label, Direction::kN);
  EXPECT_EQ(c.feature.type, EvokingFeature::Type::kEdge);
  EXPECT_EQ(c.feature.index, 4u);
  EXPECT_EQ(c.feature.last_index, 5u);
  ASSERT_EQ(c.chords.size(), 2u);
  EXPECT_EQ(c.chords[0], (Segment{{0, 1}, {1, 1}}));
  EXPECT_EQ(c.chords[1], (Segment{{3, 1}, {4, 1}}));
}

TEST(ExtractCuts, SpikeTipEvokesNorthCut) {
  auto cuts = extract_cuts(spike());
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0].label, Direction::kN);
  EXPECT_EQ(cuts[0].chords.size(), 2u);
  EXPECT_EQ(cuts[0].chords[0], (Segment{{0, 2}, {3, 2}}));
  EXPECT_EQ(cuts[0].chords[1], (Segment{{3, 2}, {7, 2}}));
}

TEST(ExtractCuts, LabelsMatchFeatureKind) {
  // Staircase with reflex corners in every direction.
  auto poly = validate_polygon({{0, 0}, {6, 0}, {6, 2}, {4, 2}, {4, 4}, {6, 4}, {6, 6},
                                {0, 6}, {0, 4}, {2, 4}, {2, 2}, {0, 2}});
  auto cuts = extract_cuts(poly);
  ASSERT_FALSE(cuts.empty());
  for (const auto& c : cuts) {
    EXPECT_EQ(c.label, label_for(c.feature.kind));
    EXPECT_EQ(c.axis, axis_for(c.feature.kind));
    const auto& v = poly[c.feature.index];
    for (const auto& s : c.chords) {
      if (c.axis == Axis::kHorizontal) {
        EXPECT_EQ(s.a.y, v.y);
        EXPECT_EQ(s.b.y, v.y);
      } else {
        EXPECT_EQ(s.a.x, v.x);
        EXPECT_EQ(s.b.x, v.x);
      }
    }
  }
}

TEST(ExtractCuts, CoincidentCutsMerge) {
  // Two spike tips at the same height y = 2.
  auto poly = validate_polygon({{0, 0}, {9, 0}, {9, 5}, {7, 5}, {6, 2}, {5, 5}, {4, 5},
                                {3, 2}, {2, 5}, {0, 5}});
  auto cuts = extract_cuts(poly);
  std::size_t horizontal = 0;
  for (const auto& c : cuts) {
    if (c.axis != Axis::kHorizontal) continue;
    ++horizontal;
    EXPECT_EQ(c.feature.index, 4u);
    ASSERT_EQ(c.merged.size(), 1u);
    EXPECT_EQ(c.merged[0].index, 7u);
  }
  EXPECT_EQ(horizontal, 1u);
}

TEST(SplitByCut, U4ThreeParts) {
  auto poly = u4();
  auto cut = extract_cuts(poly).at(0);
  auto parts = split_by_cut(poly, cut);
  ASSERT_EQ(parts.size(), 3u);
  Rational total;
  for (const auto& p : parts) total += polygon_area(p);
  EXPECT_EQ(total, polygon_area(poly));
  std::vector<Rational> areas;
  for (const auto& p : parts) areas.push_back(polygon_area(p));
  std::sort(areas.begin(), areas.end());
  EXPECT_EQ(areas, (std::vector<Rational>{3, 3, 4}));
}

TEST(SplitByCut, OneSidedCutGivesTwoParts) {
  auto poly = u4();
  auto cut = extract_cuts(poly).at(0);
  cut.chords.pop_back();
  auto parts = split_by_cut(poly, cut);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(polygon_area(parts[0]) + polygon_area(parts[1]), polygon_area(poly));
}

TEST(SplitByCut, RejectsForeignCut) {
  auto cut = extract_cuts(u4()).at(0);
  cut.chords[0] = Segment{{0, 5}, {1, 5}};
  try {
    split_by_cut(u4(), cut);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCutNotInPolygon);
  }
}

TEST(CutSeparates, Examples) {
  auto poly = u4();
  auto cut = extract_cuts(poly).at(0);
  EXPECT_TRUE(cut_separates(poly, cut, pt("1/2", "3"), pt("7/2", "3")));
  EXPECT_FALSE(cut_separates(poly, cut, pt("1/2", "3"), pt("1/2", "7/2")));
  EXPECT_TRUE(cut_separates(poly, cut, pt("2", "1/2"), pt("1/2", "3")));
  try {
    cut_separates(poly, cut, pt("1/2", "1"), pt("2", "1/2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPointOnCut);
  }
}

TEST(CutSeparates, EveryBlockedPairIsSeparatedBySomeCut) {
  auto poly = validate_polygon({{0, 0}, {10, 0}, {10, 6}, {8, 6}, {7, 2}, {6, 7}, {4, 3},
                                {3, 8}, {2, 4}, {0, 9}});
  auto cuts = extract_cuts(poly);
  GeodesicContext ctx(poly);
  std::mt19937_64 rng(41);
  int blocked = 0;
  for (int i = 0; i < 400; ++i) {
    ExactPoint p{make_rational(static_cast<long>(rng() % 199) + 1, 20),
                 make_rational(static_cast<long>(rng() % 179) + 1, 20)};
    ExactPoint q{make_rational(static_cast<long>(rng() % 199) + 1, 20),
                 make_rational(static_cast<long>(rng() % 179) + 1, 20)};
    if (point_in_polygon(poly, p) != Containment::kInterior ||
        point_in_polygon(poly, q) != Containment::kInterior) {
      continue;
    }
    bool on_any = false;
    for (const auto& c : cuts) on_any |= on_cut(c, p) || on_cut(c, q);
    if (on_any || l1_visible(ctx, p, q)) continue;
    ++blocked;
    bool separated = false;
    for (const auto& c : cuts) separated |= cut_separates(poly, c, p, q);
    EXPECT_TRUE(separated) << p << " " << q;
  }
  EXPECT_GT(blocked, 10);
}
