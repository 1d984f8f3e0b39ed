#pragma once

#include <compare>
#include <ostream>
#include <variant>

#include "vcvis/rational.hpp"

namespace vcvis {

struct ExactPoint {
  Rational x;
  Rational y;

  ExactPoint() = default;
  ExactPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  ExactPoint(std::int64_t px, std::int64_t py) : x(px), y(py) {}

  friend bool operator==(const ExactPoint& a, const ExactPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  // Lexicographic (x, then y). Used for ordered containers only.
  friend bool operator<(const ExactPoint& a, const ExactPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

std::ostream& operator<<(std::ostream& os, const ExactPoint& p);

inline ExactPoint operator+(const ExactPoint& a, const ExactPoint& b) {
  return {Rational(a.x + b.x), Rational(a.y + b.y)};
}
inline ExactPoint operator-(const ExactPoint& a, const ExactPoint& b) {
  return {Rational(a.x - b.x), Rational(a.y - b.y)};
}
inline ExactPoint operator*(const Rational& s, const ExactPoint& a) {
  return {Rational(s * a.x), Rational(s * a.y)};
}

inline Rational cross(const ExactPoint& u, const ExactPoint& v) {
  return u.x * v.y - u.y * v.x;
}
inline Rational dot(const ExactPoint& u, const ExactPoint& v) {
  return u.x * v.x + u.y * v.y;
}
// (b - a) x (c - a)
Rational cross3(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

ExactPoint midpoint(const ExactPoint& a, const ExactPoint& b);
Rational squared_distance(const ExactPoint& a, const ExactPoint& b);

struct Segment {
  ExactPoint a;
  ExactPoint b;

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
};

enum class Orientation { kClockwise = -1, kCollinear = 0, kCounterClockwise = 1 };

Orientation orientation(const ExactPoint& a, const ExactPoint& b,
                        const ExactPoint& c);

// True when p lies on the closed segment ab.
bool on_segment(const ExactPoint& p, const ExactPoint& a, const ExactPoint& b);

struct NoIntersection {
  friend bool operator==(NoIntersection, NoIntersection) { return true; }
};
using SegmentIntersection = std::variant<NoIntersection, ExactPoint, Segment>;

// Exact intersection of two closed segments. An overlap is reported as a
// segment ordered along s.
SegmentIntersection segment_intersection(const Segment& s, const Segment& t);

// Parameter of p along a->b measured as dot(p - a, b - a); monotone in the
// true arc-length parameter, which is all the sorting callers need.
Rational projection_key(const ExactPoint& a, const ExactPoint& b,
                        const ExactPoint& p);

}  // namespace vcvis
