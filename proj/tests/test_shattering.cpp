#include <gtest/gtest.h>

#include <bit>
#include <filesystem>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vcvis/error.hpp"
#include "vcvis/render.hpp"
#include "vcvis/shattering.hpp"

using namespace vcvis;
using namespace vcvis::testing;

namespace {

const std::filesystem::path kCorpus = VCVIS_DATA_DIR;

PointSet u4_points() { return PointSet::from_positions({pt("1/2", "3")}); }

// Achieved signatures restricted to the labels in `mask`, re-indexed densely.
std::set<Signature> restrict_to(const std::vector<Signature>& achieved, Signature mask) {
  std::set<Signature> out;
  for (Signature s : achieved) {
    Signature r = 0;
    int bit = 0;
    for (int i = 0; i < 32; ++i) {
      if (!(mask & (Signature{1} << i))) continue;
      if (s & (Signature{1} << i)) r |= Signature{1} << bit;
      ++bit;
    }
    out.insert(r);
  }
  return out;
}

}  // namespace

TEST(ShatterCheck, ConvexSinglePointIsNotShattered) {
  auto r = shatter_check(unit_square(), PointSet::from_positions({pt("1/3", "1/2")}),
                         Metric::kL1);
  EXPECT_FALSE(r.shattered);
  EXPECT_EQ(r.achieved, std::vector<Signature>{1});
  EXPECT_EQ(r.missing, std::vector<Signature>{0});
}

TEST(ShatterCheck, U4) {
  auto r = shatter_check(u4(), u4_points(), Metric::kL1);
  EXPECT_TRUE(r.shattered);
  ASSERT_EQ(r.witnesses.size(), 2u);
  EXPECT_GT(r.witnesses.at(0).x, 3);
  EXPECT_EQ(signature_of(u4(), u4_points(), r.witnesses.at(1), Metric::kL1), 1u);
  EXPECT_TRUE(r.missing.empty());
}

TEST(LowerBound, ThirtyTwoSignaturesWithVerifiedWitnesses) {
  Scenario s = build_lowerbound_scenario();
  EXPECT_TRUE(s.polygon.general_position());
  ASSERT_EQ(s.points.size(), 5u);
  auto r = shatter_check(s.polygon, s.points, Metric::kL1);
  EXPECT_TRUE(r.shattered);
  EXPECT_EQ(r.achieved.size(), 32u);
  GeodesicContext context(s.polygon);
  for (const auto& [sig, p] : r.witnesses) {
    EXPECT_EQ(point_in_polygon(s.polygon, p), Containment::kInterior);
    EXPECT_EQ(signature_of(context, s.points, p, Metric::kL1), sig) << format_signature(sig);
  }
}

TEST(LowerBound, MatchesGoldenFile) {
  EXPECT_EQ(load_scenario(kCorpus / "lowerbound5.json"), build_lowerbound_scenario());
}

TEST(LowerBound, EverySubsetIsShattered) {
  Scenario s = build_lowerbound_scenario();
  auto full = shatter_check(s.polygon, s.points, Metric::kL1);
  for (Signature mask = 1; mask < 32; ++mask) {
    EXPECT_EQ(restrict_to(full.achieved, mask).size(), std::size_t{1} << std::popcount(mask));
  }
  // Recomputed from scratch for the four-point subsets.
  for (int drop = 0; drop < 5; ++drop) {
    std::vector<ExactPoint> kept;
    for (int i = 0; i < 5; ++i) {
      if (i != drop) kept.push_back(s.points.points[static_cast<std::size_t>(i)].position);
    }
    auto r = shatter_check(s.polygon, PointSet::from_positions(kept), Metric::kL1);
    EXPECT_TRUE(r.shattered) << "without point " << drop + 1;
  }
}

TEST(LowerBound, LemmasHold) {
  Scenario s = build_lowerbound_scenario();
  auto dec = signature_map(s.polygon, s.points, Metric::kL1);
  auto l1 = verify_lemma1(dec, 5);
  auto l2 = verify_lemma2(dec, 5);
  auto l3 = verify_direction_bound(dec, 5);
  EXPECT_TRUE(l1.applicable && l1.holds) << l1.detail;
  EXPECT_TRUE(l2.applicable && l2.holds) << l2.detail;
  EXPECT_TRUE(l3.applicable && l3.holds) << l3.detail;
  EXPECT_EQ(l2.detail, "5 component(s) checked");
  EXPECT_EQ(l3.detail,
            "N: 1 point(s), 1 cut(s); E: 1 point(s), 1 cut(s); S: 1 point(s), 1 cut(s); "
            "W: 2 point(s), 1 cut(s)");
}

TEST(Lemmas, U4SinglePoint) {
  auto l1 = verify_lemma1(u4(), u4_points(), Metric::kL1);
  auto l2 = verify_lemma2(u4(), u4_points(), Metric::kL1);
  auto l3 = verify_direction_bound(u4(), u4_points());
  EXPECT_TRUE(l1.holds);
  EXPECT_TRUE(l2.holds);
  EXPECT_EQ(l2.detail, "1 component(s) checked");
  EXPECT_TRUE(l3.holds);
  EXPECT_EQ(l3.detail, "N: 1 point(s), 1 cut(s)");
}

TEST(Lemmas, ConvexHoldsTrivially) {
  auto pts = PointSet::from_positions({pt("1/4", "1/4"), pt("3/4", "1/2")});
  for (Metric m : {Metric::kL1, Metric::kL2}) {
    EXPECT_TRUE(verify_lemma1(unit_square(), pts, m).holds);
    EXPECT_TRUE(verify_lemma2(unit_square(), pts, m).holds);
  }
  EXPECT_TRUE(verify_direction_bound(unit_square(), pts).holds);
}

TEST(Lemmas, EmptyRegionIsNotApplicable) {
  Scenario s = load_scenario(kCorpus / "spiral.json");
  auto dec = signature_map(s.polygon, s.points, Metric::kL1);
  ASSERT_TRUE(region_of(dec, full_signature(2)).empty());
  auto r = verify_lemma1(dec, 2);
  EXPECT_FALSE(r.applicable);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(verify_lemma2(dec, 2).applicable);
  EXPECT_FALSE(verify_direction_bound(dec, 2).applicable);
}

TEST(Lemmas, URegionIsConnectedButNotMutuallyVisible) {
  Scenario s = load_scenario(kCorpus / "u_region4.json");
  auto dec = signature_map(s.polygon, s.points, Metric::kL1);
  auto comps = region_of(dec, full_signature(4));
  ASSERT_EQ(comps.size(), 1u);
  GeodesicContext context(s.polygon);
  bool blind_pair = false;
  for (std::size_t a : comps[0]) {
    for (std::size_t b : comps[0]) {
      if (a < b && !l1_visible(context, dec.faces[a].representative,
                               dec.faces[b].representative)) {
        blind_pair = true;
      }
    }
  }
  EXPECT_TRUE(blind_pair);
  EXPECT_TRUE(verify_lemma1(dec, 4).holds);
  EXPECT_TRUE(verify_lemma2(dec, 4).holds);
  EXPECT_TRUE(verify_direction_bound(dec, 4).holds);
}

TEST(Lemmas, DetectsDisconnectedRegion) {
  // Hand-made decomposition: two faces with the full signature, not adjacent.
  FaceDecomposition dec;
  dec.metric = Metric::kL1;
  auto square = [](long x) {
    return SimplePolygon::trusted({{x, 0}, {x + 1, 0}, {x + 1, 1}, {x, 1}});
  };
  dec.faces.push_back({square(0), pt("1/2", "1/2"), 1, {}});
  dec.faces.push_back({square(1), pt("3/2", "1/2"), 0, {}});
  dec.faces.push_back({square(2), pt("5/2", "1/2"), 1, {}});
  dec.adjacency.push_back({0, 1, {{1, 0}, {1, 1}}, {{0, Direction::kE}}, std::nullopt});
  dec.adjacency.push_back({1, 2, {{2, 0}, {2, 1}}, {{1, Direction::kW}}, std::nullopt});
  auto r = verify_lemma1(dec, 1);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(*r.counterexample, (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(verify_lemma2(dec, 1).holds);
}

TEST(Lemmas, DetectsIsolatedSubRegionAndDirectionExcess) {
  // A row of faces {1,2,3} {2,3} {1,3} {1,2} {1,2,3} {1,3}: the first {1,3}
  // face touches no full face, and all three points are cut off along N.
  FaceDecomposition dec;
  dec.metric = Metric::kL1;
  auto square = [](long x) {
    return SimplePolygon::trusted({{x, 0}, {x + 1, 0}, {x + 1, 1}, {x, 1}});
  };
  const Signature sigs[] = {7, 6, 5, 3, 7, 5};
  for (long i = 0; i < 6; ++i) {
    dec.faces.push_back({square(i), {Rational(Rational(i) + Rational(1, 2)), Rational(1, 2)},
                         sigs[i], {}});
  }
  for (std::size_t i = 0; i + 1 < 6; ++i) {
    auto x = static_cast<long>(i) + 1;
    dec.adjacency.push_back(
        {i, i + 1, {{x, 0}, {x, 1}}, {{static_cast<int>(i), Direction::kN}}, std::nullopt});
  }
  auto l2 = verify_lemma2(dec, 3);
  EXPECT_FALSE(l2.holds);
  EXPECT_EQ(l2.counterexample, (std::vector<std::size_t>{2}));
  auto l3 = verify_direction_bound(dec, 3);
  EXPECT_FALSE(l3.holds) << l3.detail;
  EXPECT_EQ(l3.detail, "N: 3 point(s), 3 cut(s)");
}

TEST(StaircaseGrid, Examples) {
  EXPECT_TRUE(grid_staircase_visible(unit_square(), pt("1/8", "7/8"), pt("7/8", "1/8"),
                                     q("1/4")));
  EXPECT_FALSE(grid_staircase_visible(u4(), pt("1/2", "3"), pt("7/2", "3"), q("1/8")));
  EXPECT_TRUE(grid_staircase_visible(u4(), pt("1/2", "3"), pt("2", "1/2"), q("1/8")));
}

TEST(StaircaseGrid, CellsTouchingTheNotchAreUnusable) {
  StaircaseGrid grid(u4(), q("1/8"));
  EXPECT_TRUE(grid.usable(pt("1/2", "3")));
  EXPECT_TRUE(grid.usable(pt("2", "15/16")));
  EXPECT_FALSE(grid.usable(pt("2", "3")));
  EXPECT_THROW(StaircaseGrid(u4(), 0), Error);
}

TEST(StaircaseGrid, AgreesWithL1VisibleAwayFromCuts) {
  const std::vector<SimplePolygon> polygons = {
      u4(), load_scenario(kCorpus / "zigzag.json").polygon,
      load_scenario(kCorpus / "u_region4.json").polygon};
  std::mt19937_64 rng(5);
  for (const auto& poly : polygons) {
    const Rational pitch = grid_pitch(poly);
    StaircaseGrid grid(poly, pitch);
    GeodesicContext context(poly);
    auto cuts = extract_cuts(poly);
    int compared = 0;
    for (int attempt = 0; attempt < 4000 && compared < 100; ++attempt) {
      ExactPoint p = random_interior(poly, rng), r = random_interior(poly, rng);
      if (!grid.usable(p) || !grid.usable(r)) continue;
      if (!clearance_qualified(context, cuts, p, r, pitch)) continue;
      ++compared;
      EXPECT_EQ(l1_visible(context, p, r), grid.visible(p, r)) << p << " " << r;
    }
    EXPECT_GE(compared, 50);
  }
}

TEST(Search, Deterministic) {
  for (Generator g : {Generator::kRandomStaircase, Generator::kRandomSimple}) {
    SearchConfig config{4, 12, 99, g, 1};
    auto a = search_no_shatter(config);
    config.threads = 3;
    auto b = search_no_shatter(config);
    EXPECT_EQ(a.successes, b.successes);
    EXPECT_EQ(a.best_signature_count, b.best_signature_count);
    EXPECT_EQ(a.best_trial, b.best_trial);
    EXPECT_EQ(a.best_scenario, b.best_scenario);
    EXPECT_EQ(generate_scenario(config, 5), generate_scenario(config, 5));
    EXPECT_FALSE(generate_scenario(config, 5) == generate_scenario(config, 6));
  }
}

TEST(Search, GeneratedScenariosAreValid) {
  for (Generator g : {Generator::kRandomStaircase, Generator::kRandomSimple}) {
    for (std::size_t t = 0; t < 10; ++t) {
      Scenario s = generate_scenario({6, 1, 17, g, 1}, t);
      EXPECT_TRUE(s.polygon.general_position());
      EXPECT_EQ(s.points.size(), 6u);
      EXPECT_NO_THROW(validate_point_set(s.polygon, s.points));
      EXPECT_NO_THROW(shatter_check(s.polygon, s.points, Metric::kL1));
      if (g == Generator::kRandomStaircase) {
        for (std::size_t i = 0; i < s.polygon.size(); ++i) {
          const Segment e = s.polygon.edge(i);
          EXPECT_TRUE(e.a.x == e.b.x || e.a.y == e.b.y);
        }
      }
    }
  }
}

TEST(Search, TrialMatchesShatterCheck) {
  SearchConfig config{3, 1, 4, Generator::kRandomSimple, 1};
  for (std::size_t t = 0; t < 5; ++t) {
    Scenario s = generate_scenario(config, t);
    auto trial = run_trial(s, t);
    auto r = shatter_check(s.polygon, s.points, Metric::kL1);
    EXPECT_EQ(trial.signature_count, r.achieved.size());
    EXPECT_EQ(trial.shattered, r.shattered);
  }
}

TEST(Search, SinglePointInConvexPolygonNeverShatters) {
  std::mt19937_64 rng(8);
  const std::vector<SimplePolygon> convex = {
      unit_square(), validate_polygon({{0, 0}, {5, 1}, {6, 4}, {2, 6}, {-1, 3}}),
      validate_polygon({{0, 0}, {9, 2}, {3, 7}})};
  for (const auto& poly : convex) {
    for (int k = 0; k < 5; ++k) {
      Scenario s;
      s.polygon = poly;
      s.points = PointSet::from_positions({random_interior(poly, rng)});
      auto r = run_trial(s, 0);
      EXPECT_FALSE(r.shattered);
      EXPECT_EQ(r.signature_count, 1u);
    }
  }
}

TEST(Search, MutatedFixtureStillShattersFivePoints) {
  auto summary = search_no_shatter({5, 6, 1, Generator::kMutateFixture, 1});
  EXPECT_GE(summary.successes, 1u);
  EXPECT_EQ(summary.best_signature_count, 32u);
}

TEST(Search, RejectsBadConfig) {
  EXPECT_THROW(search_no_shatter({6, 0, 1, Generator::kRandomSimple, 1}), Error);
  EXPECT_THROW(search_no_shatter({0, 5, 1, Generator::kRandomSimple, 1}), Error);
  EXPECT_EQ(parse_generator("staircase"), Generator::kRandomStaircase);
  EXPECT_EQ(parse_generator("mutate"), Generator::kMutateFixture);
  EXPECT_THROW(parse_generator("bogus"), Error);
}

TEST(Render, PaletteTable) {
  EXPECT_EQ(palette_color(5, 5), "#d62728");
  EXPECT_EQ(palette_color(4, 5), "#8c564b");
  EXPECT_EQ(palette_color(3, 5), "#90ee90");
  EXPECT_EQ(palette_color(2, 5), "#87cefa");
  EXPECT_EQ(palette_color(1, 5), "#dda0dd");
  EXPECT_EQ(palette_color(0, 5), "#ffffff");
  EXPECT_EQ(palette_color(1, 8), "#d3d3d3");
}

TEST(Render, U4HasThreeFacesInTwoColours) {
  auto dec = signature_map(u4(), u4_points(), Metric::kL1);
  std::string svg = render_svg(dec, u4_points());
  std::set<std::string> fills;
  std::size_t polygons = 0;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos;
       at = svg.find("<polygon", at + 1)) {
    ++polygons;
    auto f = svg.find("fill=\"", at);
    fills.insert(svg.substr(f + 6, 7));
  }
  EXPECT_EQ(polygons, 3u);
  EXPECT_EQ(fills, (std::set<std::string>{"#d62728", "#ffffff"}));
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_EQ(svg, render_svg(dec, u4_points()));
}

TEST(Render, LowerBoundUsesSixColoursAndAllLabels) {
  Scenario s = build_lowerbound_scenario();
  auto dec = signature_map(s.polygon, s.points, Metric::kL1);
  RenderOptions options;
  options.signature_labels = true;
  std::string svg = render_svg(dec, s.points, options);
  std::set<std::string> fills, labels;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos;
       at = svg.find("<polygon", at + 1)) {
    auto f = svg.find("fill=\"", at);
    fills.insert(svg.substr(f + 6, 7));
    auto d = svg.find("data-signature=\"", at) + 16;
    labels.insert(svg.substr(d, svg.find('"', d) - d));
  }
  EXPECT_EQ(fills.size(), 6u);
  EXPECT_EQ(labels.size(), 32u);
}

TEST(LowerBound, NoSixthPointCompletesSixtyFourSignatures) {
  Scenario s = build_lowerbound_scenario();
  const auto cuts = extract_cuts(s.polygon);
  const GeodesicContext context(s.polygon);
  const FaceDecomposition dec = decompose(s.polygon, Metric::kL1);
  std::mt19937_64 rng(11);
  int placements = 0;
  while (placements < 100) {
    ExactPoint extra = random_interior(s.polygon, rng);
    bool on_chord = false;
    for (const auto& cut : cuts) on_chord = on_chord || on_cut(cut, extra);
    if (on_chord) continue;
    std::vector<ExactPoint> positions;
    for (const auto& lp : s.points.points) positions.push_back(lp.position);
    positions.push_back(extra);
    PointSet six = PointSet::from_positions(positions);
    SignatureEvaluator evaluate(context, six, Metric::kL1);
    std::set<Signature> achieved;
    for (const Face& f : dec.faces) achieved.insert(evaluate(f.representative));
    EXPECT_LT(achieved.size(), 64u) << extra;
    ++placements;
  }
}
