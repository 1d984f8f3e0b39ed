#include "vcvis/cuts.hpp"

#include <algorithm>
#include <sstream>

#include "vcvis/error.hpp"
#include "vcvis/raycast.hpp"
#include "vcvis/subdivision.hpp"
#include "vcvis/visibility.hpp"

namespace vcvis {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kN: return "N";
    case Direction::kE: return "E";
    case Direction::kS: return "S";
    case Direction::kW: return "W";
  }
  return "?";
}

std::string_view to_string(ExtremumKind k) {
  switch (k) {
    case ExtremumKind::kXMin: return "XMin";
    case ExtremumKind::kXMax: return "XMax";
    case ExtremumKind::kYMin: return "YMin";
    case ExtremumKind::kYMax: return "YMax";
  }
  return "?";
}

std::string_view to_string(Axis a) {
  return a == Axis::kHorizontal ? "horizontal" : "vertical";
}

Direction label_for(ExtremumKind kind) {
  switch (kind) {
    case ExtremumKind::kYMin: return Direction::kN;
    case ExtremumKind::kYMax: return Direction::kS;
    case ExtremumKind::kXMin: return Direction::kE;
    case ExtremumKind::kXMax: return Direction::kW;
  }
  return Direction::kN;
}

Axis axis_for(ExtremumKind kind) {
  return (kind == ExtremumKind::kYMin || kind == ExtremumKind::kYMax)
             ? Axis::kHorizontal
             : Axis::kVertical;
}

namespace {

const Rational& coord(const ExactPoint& p, bool use_x) { return use_x ? p.x : p.y; }

// Compares neighbor coordinates against the feature coordinate:
// -1 both larger (local minimum), +1 both smaller (local maximum), 0 neither.
int extremum(const Rational& before, const Rational& here, const Rational& after) {
  if (before > here && after > here) return -1;
  if (before < here && after < here) return 1;
  return 0;
}

ExtremumKind kind_of(bool use_x, int ext) {
  if (use_x) return ext < 0 ? ExtremumKind::kXMin : ExtremumKind::kXMax;
  return ext < 0 ? ExtremumKind::kYMin : ExtremumKind::kYMax;
}

ExactPoint axis_vector(AxisDirection dir) {
  switch (dir) {
    case AxisDirection::kPlusX: return {1, 0};
    case AxisDirection::kMinusX: return {-1, 0};
    case AxisDirection::kPlusY: return {0, 1};
    case AxisDirection::kMinusY: return {0, -1};
  }
  return {1, 0};
}

Segment ordered(ExactPoint a, ExactPoint b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

std::vector<EvokingFeature> extremal_features(const SimplePolygon& polygon) {
  const std::size_t n = polygon.size();
  std::vector<EvokingFeature> out;
  for (bool use_x : {true, false}) {
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& here = coord(polygon[i], use_x);
      const Rational& before = coord(polygon[polygon.prev(i)], use_x);
      if (before == here) continue;  // not the first vertex of a run
      // Walk the run of equal coordinates starting at i.
      std::size_t last = i;
      std::size_t steps = 0;
      while (coord(polygon[polygon.next(last)], use_x) == here && steps < n) {
        last = polygon.next(last);
        ++steps;
      }
      const Rational& after = coord(polygon[polygon.next(last)], use_x);
      int ext = extremum(before, here, after);
      if (ext == 0) continue;
      EvokingFeature f;
      f.type = last == i ? EvokingFeature::Type::kVertex : EvokingFeature::Type::kEdge;
      f.index = i;
      f.last_index = last;
      f.kind = kind_of(use_x, ext);
      out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end(), [](const EvokingFeature& a, const EvokingFeature& b) {
    if (a.index != b.index) return a.index < b.index;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return out;
}

ExactPoint ray_shoot(const SimplePolygon& polygon, const ExactPoint& origin,
                     AxisDirection dir) {
  return first_contact(polygon, origin, axis_vector(dir));
}

std::vector<L1Cut> extract_cuts(const SimplePolygon& polygon) {
  std::vector<L1Cut> cuts;
  for (const EvokingFeature& f : extremal_features(polygon)) {
    const Axis axis = axis_for(f.kind);
    const bool horizontal = axis == Axis::kHorizontal;
    const ExactPoint& first = polygon[f.index];
    const ExactPoint& last = polygon[f.last_index];
    // Low and high ends of the feature along the cut axis.
    bool first_is_low = horizontal ? first.x <= last.x : first.y <= last.y;
    const ExactPoint& low = first_is_low ? first : last;
    const ExactPoint& high = first_is_low ? last : first;
    ExactPoint down = horizontal ? ExactPoint(-1, 0) : ExactPoint(0, -1);
    ExactPoint up = horizontal ? ExactPoint(1, 0) : ExactPoint(0, 1);

    L1Cut cut;
    cut.feature = f;
    cut.axis = axis;
    cut.label = label_for(f.kind);
    ExactPoint end_low = extend_inside(polygon, low, down);
    ExactPoint end_high = extend_inside(polygon, high, up);
    if (!(end_low == low)) cut.chords.push_back(ordered(end_low, low));
    if (!(end_high == high)) cut.chords.push_back(ordered(high, end_high));
    if (cut.chords.empty()) continue;

    // Same axis, same line and same overall extent means the same cut.
    auto extent = [&](const L1Cut& c) {
      return std::make_pair(c.chords.front().a, c.chords.back().b);
    };
    auto same = std::find_if(cuts.begin(), cuts.end(), [&](const L1Cut& other) {
      return other.axis == cut.axis && extent(other) == extent(cut);
    });
    if (same != cuts.end()) {
      same->merged.push_back(f);
      continue;
    }
    cut.id = static_cast<int>(cuts.size());
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

bool on_cut(const L1Cut& cut, const ExactPoint& p) {
  return std::any_of(cut.chords.begin(), cut.chords.end(),
                     [&](const Segment& s) { return on_segment(p, s.a, s.b); });
}

namespace {

void check_cut(const SimplePolygon& polygon, const L1Cut& cut) {
  for (const Segment& s : cut.chords) {
    if (point_in_polygon(polygon, s.a) != Containment::kBoundary ||
        point_in_polygon(polygon, s.b) != Containment::kBoundary ||
        !l2_visible(polygon, s.a, s.b)) {
      std::ostringstream msg;
      msg << "chord " << s.a << "-" << s.b << " of cut " << cut.id
          << " does not span the polygon";
      throw Error(ErrorCode::kCutNotInPolygon, msg.str());
    }
  }
}

}  // namespace

std::vector<SimplePolygon> split_by_cut(const SimplePolygon& polygon, const L1Cut& cut) {
  check_cut(polygon, cut);
  std::vector<Chord> chords;
  for (const Segment& s : cut.chords) chords.push_back({s, cut.id});
  std::vector<SimplePolygon> parts;
  for (auto& face : subdivide(polygon, chords).faces) {
    parts.push_back(SimplePolygon::trusted(std::move(face)));
  }
  return parts;
}

bool cut_separates(const SimplePolygon& polygon, const L1Cut& cut,
                   const ExactPoint& a, const ExactPoint& b) {
  for (const ExactPoint* p : {&a, &b}) {
    if (on_cut(cut, *p)) {
      std::ostringstream msg;
      msg << *p << " lies on cut " << cut.id;
      throw Error(ErrorCode::kPointOnCut, msg.str());
    }
  }
  auto parts = split_by_cut(polygon, cut);
  auto part_of = [&](const ExactPoint& p) -> long {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (point_in_polygon(parts[i], p) != Containment::kExterior) {
        return static_cast<long>(i);
      }
    }
    std::ostringstream msg;
    msg << p << " is outside the polygon";
    throw Error(ErrorCode::kPointOutsidePolygon, msg.str());
  };
  return part_of(a) != part_of(b);
}

}  // namespace vcvis
