#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcvis/decomposition.hpp"
#include "vcvis/scenario.hpp"

namespace vcvis {

struct ShatterReport {
  std::size_t point_count = 0;
  bool shattered = false;
  std::vector<Signature> achieved;           // sorted
  std::map<Signature, ExactPoint> witnesses;  // face representative per signature
  std::map<Signature, std::size_t> witness_faces;
  std::vector<Signature> missing;            // sorted
};

ShatterReport shatter_report(const FaceDecomposition& dec, std::size_t point_count);
ShatterReport shatter_check(const SimplePolygon& polygon, const PointSet& points,
                            Metric metric, const SignatureOptions& options = {});

struct LemmaReport {
  int lemma = 0;            // 1, 2, or 3 (the direction bound)
  bool applicable = true;   // false when V(S) is empty
  bool holds = true;
  std::string detail;
  // Faces involved in a violation, in ascending order.
  std::optional<std::vector<std::size_t>> counterexample;
};

// The decomposition must carry signatures for the full point set.
LemmaReport verify_lemma1(const FaceDecomposition& dec, std::size_t point_count);
LemmaReport verify_lemma2(const FaceDecomposition& dec, std::size_t point_count);
// L1 only: per direction, at most two points are separated from V(S) by cuts
// of that direction, and two points imply one shared cut.
LemmaReport verify_direction_bound(const FaceDecomposition& dec, std::size_t point_count);

LemmaReport verify_lemma1(const SimplePolygon& polygon, const PointSet& points, Metric metric);
LemmaReport verify_lemma2(const SimplePolygon& polygon, const PointSet& points, Metric metric);
LemmaReport verify_direction_bound(const SimplePolygon& polygon, const PointSet& points);

// Test oracle for L1 visibility: a monotone 4-connected path on the grid of
// the given pitch (anchored at the bounding box minimum) from p's cell to q's
// cell through cells whose closed square lies inside the polygon.
class StaircaseGrid {
 public:
  StaircaseGrid(const SimplePolygon& polygon, const Rational& pitch);

  // False if either cell is unusable.
  bool visible(const ExactPoint& p, const ExactPoint& q) const;
  bool usable(const ExactPoint& p) const;
  const Rational& pitch() const { return pitch_; }

 private:
  std::pair<long, long> cell_of(const ExactPoint& p) const;

  Rational pitch_;
  ExactPoint origin_;
  long columns_ = 0;
  long rows_ = 0;
  std::vector<char> inside_;
};

bool grid_staircase_visible(const SimplePolygon& polygon, const ExactPoint& p,
                            const ExactPoint& q, const Rational& pitch);

Scenario build_lowerbound_scenario();

enum class Generator { kRandomStaircase, kRandomSimple, kMutateFixture };
std::string_view to_string(Generator g);
Generator parse_generator(std::string_view text);  // "staircase", "simple", "mutate"

struct SearchConfig {
  std::size_t point_count = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  Generator generator = Generator::kRandomStaircase;
  unsigned threads = 1;
};

struct TrialResult {
  std::size_t trial = 0;
  std::size_t faces = 0;
  std::size_t signature_count = 0;
  bool shattered = false;
  // All signatures of size n, n - 1 and n - 2 occur.
  bool top_layers = false;
};

struct SearchSummary {
  SearchConfig config;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t top_layer_successes = 0;
  std::size_t best_signature_count = 0;
  std::size_t best_trial = 0;
  Scenario best_scenario;
};

// One random scenario for (seed, trial); identical inputs give identical
// scenarios on every run.
Scenario generate_scenario(const SearchConfig& config, std::size_t trial);
TrialResult run_trial(const Scenario& scenario, std::size_t trial);
SearchSummary search_no_shatter(const SearchConfig& config);

}  // namespace vcvis
