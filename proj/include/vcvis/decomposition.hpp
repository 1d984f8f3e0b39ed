#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcvis/cuts.hpp"
#include "vcvis/visibility.hpp"

namespace vcvis {

struct LabeledPoint {
  int label = 0;
  ExactPoint position;
};

// Labels are 1..n in list order.
struct PointSet {
  std::vector<LabeledPoint> points;

  std::size_t size() const { return points.size(); }
  static PointSet from_positions(std::vector<ExactPoint> positions);
};

// Bit i stands for the point with label i + 1.
using Signature = std::uint32_t;
constexpr std::size_t kMaxPoints = 20;

inline Signature full_signature(std::size_t n) {
  return n >= 32 ? ~Signature{0} : (Signature{1} << n) - 1;
}
std::vector<int> signature_labels(Signature s);
std::string format_signature(Signature s);  // "{1,3,4}"

// One chord contributing to a shared boundary piece. For L2 windows the cut
// field holds the index of the point whose window it is and direction is
// empty.
struct CutRef {
  int cut = 0;
  std::optional<Direction> direction;

  friend bool operator==(const CutRef&, const CutRef&) = default;
};

struct Face {
  SimplePolygon boundary;
  ExactPoint representative;
  Signature signature = 0;
  std::vector<CutRef> incident;  // sorted, unique
};

struct Adjacency {
  std::size_t a = 0;  // a < b
  std::size_t b = 0;
  Segment segment;
  std::vector<CutRef> cuts;
  // Signature at the midpoint of the shared segment, when computed.
  std::optional<Signature> midpoint_signature;
};

struct FaceDecomposition {
  Metric metric = Metric::kL1;
  std::vector<Face> faces;
  std::vector<Adjacency> adjacency;  // one entry per shared segment
  std::vector<L1Cut> cuts;           // L1
  std::vector<Segment> windows;      // L2, all points' windows
  bool signatures_filled = false;
  std::vector<Signature> achieved;   // sorted distinct face signatures
};

// Interior point: centroid of the largest triangle of the piece.
ExactPoint face_representative(const SimplePolygon& piece);

// Throws kInvalidArgument (labels, size), kPointOutsidePolygon,
// kPointOnBoundary or, for duplicated positions, kValidationError.
void validate_point_set(const SimplePolygon& polygon, const PointSet& points);

// L1 faces depend on the polygon only; L2 faces need the point set.
FaceDecomposition decompose(const SimplePolygon& polygon, Metric metric,
                            const PointSet& points = {});

// Signature queries against a fixed point set; the points are located in the
// triangulation once. Read-only after construction.
class SignatureEvaluator {
 public:
  SignatureEvaluator(const GeodesicContext& context, const PointSet& points, Metric metric);

  // Throws kPointOutsidePolygon.
  Signature operator()(const ExactPoint& q) const;

 private:
  const GeodesicContext& context_;
  const PointSet& points_;
  Metric metric_;
  std::vector<std::vector<std::size_t>> locations_;
};

Signature signature_of(const GeodesicContext& context, const PointSet& points,
                       const ExactPoint& q, Metric metric);
Signature signature_of(const SimplePolygon& polygon, const PointSet& points,
                       const ExactPoint& q, Metric metric);

struct SignatureOptions {
  unsigned threads = 1;
  bool midpoint_signatures = true;
};

// Throws kPointOnCut if a point lies on a chord of the decomposition.
FaceDecomposition signature_map(const SimplePolygon& polygon, const PointSet& points,
                                Metric metric, const SignatureOptions& options = {});

// Faces with signature exactly t, grouped into components. Two such faces are
// connected when they share a segment whose midpoint also has signature t.
// Components are sorted by their smallest face index.
std::vector<std::vector<std::size_t>> region_of(const FaceDecomposition& dec,
                                                Signature t);

}  // namespace vcvis
