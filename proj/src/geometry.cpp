#include "vcvis/geometry.hpp"

#include <utility>

namespace vcvis {

std::ostream& operator<<(std::ostream& os, const ExactPoint& p) {
  return os << '(' << format_rational(p.x) << ',' << format_rational(p.y)
            << ')';
}

Rational cross3(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

ExactPoint midpoint(const ExactPoint& a, const ExactPoint& b) {
  return {Rational((a.x + b.x) / 2), Rational((a.y + b.y) / 2)};
}

Rational squared_distance(const ExactPoint& a, const ExactPoint& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Orientation orientation(const ExactPoint& a, const ExactPoint& b,
                        const ExactPoint& c) {
  int s = sign(cross3(a, b, c));
  if (s > 0) return Orientation::kCounterClockwise;
  if (s < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

bool on_segment(const ExactPoint& p, const ExactPoint& a, const ExactPoint& b) {
  if (sign(cross3(a, b, p)) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

Rational projection_key(const ExactPoint& a, const ExactPoint& b,
                        const ExactPoint& p) {
  return (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
}

SegmentIntersection segment_intersection(const Segment& s, const Segment& t) {
  const ExactPoint& p = s.a;
  const ExactPoint& p2 = s.b;
  const ExactPoint& q = t.a;
  const ExactPoint& q2 = t.b;

  // Bounding boxes first; most pairs in a subdivision are far apart.
  if (std::max(p.x, p2.x) < std::min(q.x, q2.x) ||
      std::max(q.x, q2.x) < std::min(p.x, p2.x) ||
      std::max(p.y, p2.y) < std::min(q.y, q2.y) ||
      std::max(q.y, q2.y) < std::min(p.y, p2.y)) {
    return NoIntersection{};
  }

  ExactPoint r = p2 - p;
  ExactPoint d = q2 - q;
  Rational denom = cross(r, d);
  ExactPoint qp = q - p;

  if (sign(denom) == 0) {
    if (sign(cross(qp, r)) != 0) return NoIntersection{};
    // Collinear: clip t's endpoints to s in s's parameter.
    Rational rr = dot(r, r);
    Rational t0 = dot(qp, r) / rr;
    Rational t1 = dot(q2 - p, r) / rr;
    if (t0 > t1) std::swap(t0, t1);
    Rational lo = t0 < 0 ? Rational(0) : t0;
    Rational hi = t1 > 1 ? Rational(1) : t1;
    if (lo > hi) return NoIntersection{};
    ExactPoint a = p + lo * r;
    if (lo == hi) return a;
    return Segment{a, p + hi * r};
  }

  Rational u = cross(qp, d) / denom;  // along s
  Rational v = cross(qp, r) / denom;  // along t
  if (u < 0 || u > 1 || v < 0 || v > 1) return NoIntersection{};
  if (u == 0) return p;
  if (u == 1) return p2;
  if (v == 0) return q;
  if (v == 1) return q2;
  return p + u * r;
}

}  // namespace vcvis
