#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "vcvis/polygon.hpp"

namespace vcvis {

// Which side of a cut its evoking vertex (or edge) lies on, seen from the
// region the cut faces: a locally y-minimal feature hangs down from the
// north, and so on.
enum class Direction { kN, kE, kS, kW };
enum class ExtremumKind { kXMin, kXMax, kYMin, kYMax };
enum class Axis { kHorizontal, kVertical };

std::string_view to_string(Direction d);
std::string_view to_string(ExtremumKind k);
std::string_view to_string(Axis a);

Direction label_for(ExtremumKind kind);
Axis axis_for(ExtremumKind kind);

struct EvokingFeature {
  enum class Type { kVertex, kEdge };
  Type type = Type::kVertex;
  // Vertex index, or first vertex (in counterclockwise order) of an
  // axis-parallel edge. Collinear runs of axis-parallel edges are treated as
  // one edge ending at last_index.
  std::size_t index = 0;
  std::size_t last_index = 0;
  ExtremumKind kind = ExtremumKind::kYMin;

  friend bool operator==(const EvokingFeature&, const EvokingFeature&) = default;
};

struct L1Cut {
  int id = 0;
  EvokingFeature feature;
  // Axis-parallel, maximal in the polygon, endpoints on the boundary, each
  // stored with a < b lexicographically and sorted.
  std::vector<Segment> chords;
  Direction label = Direction::kN;
  Axis axis = Axis::kHorizontal;
  // Other features evoking exactly the same cut (non-general position).
  std::vector<EvokingFeature> merged;
};

std::vector<EvokingFeature> extremal_features(const SimplePolygon& polygon);

// Nearest boundary point strictly beyond origin along an axis direction; the
// origin itself when the ray leaves the polygon immediately.
enum class AxisDirection { kPlusX, kMinusX, kPlusY, kMinusY };
ExactPoint ray_shoot(const SimplePolygon& polygon, const ExactPoint& origin,
                     AxisDirection dir);

std::vector<L1Cut> extract_cuts(const SimplePolygon& polygon);

// Parts of the polygon left after removing the cut's chords.
// Throws kCutNotInPolygon if a chord does not span the polygon.
std::vector<SimplePolygon> split_by_cut(const SimplePolygon& polygon, const L1Cut& cut);

// Throws kPointOnCut if a or b lies on a chord.
bool cut_separates(const SimplePolygon& polygon, const L1Cut& cut,
                   const ExactPoint& a, const ExactPoint& b);

// True when p lies on one of the cut's chords.
bool on_cut(const L1Cut& cut, const ExactPoint& p);

}  // namespace vcvis
