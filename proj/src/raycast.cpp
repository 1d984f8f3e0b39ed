#include "vcvis/raycast.hpp"

#include <algorithm>

namespace vcvis {

std::vector<Rational> ray_contacts(const SimplePolygon& polygon,
                                   const ExactPoint& origin,
                                   const ExactPoint& direction) {
  std::vector<Rational> ts;
  const Rational dd = dot(direction, direction);
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const ExactPoint& a = polygon[i];
    const ExactPoint& b = polygon.vertex(i + 1);
    ExactPoint e = b - a;
    ExactPoint ao = a - origin;
    Rational denom = cross(direction, e);
    if (sign(denom) != 0) {
      Rational t = cross(ao, e) / denom;
      if (sign(t) <= 0) continue;
      Rational s = cross(ao, direction) / denom;
      if (s < 0 || s > 1) continue;
      ts.push_back(std::move(t));
    } else if (sign(cross(ao, direction)) == 0) {
      Rational ta = dot(ao, direction) / dd;
      Rational tb = dot(b - origin, direction) / dd;
      if (sign(ta) > 0) ts.push_back(std::move(ta));
      if (sign(tb) > 0) ts.push_back(std::move(tb));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

namespace {

ExactPoint at(const ExactPoint& origin, const ExactPoint& direction,
              const Rational& t) {
  return origin + t * direction;
}

}  // namespace

ExactPoint first_contact(const SimplePolygon& polygon, const ExactPoint& origin,
                         const ExactPoint& direction) {
  auto ts = ray_contacts(polygon, origin, direction);
  if (ts.empty()) return origin;
  Rational half = ts.front() / 2;
  if (point_in_polygon(polygon, at(origin, direction, half)) !=
      Containment::kInterior) {
    return origin;
  }
  return at(origin, direction, ts.front());
}

ExactPoint extend_inside(const SimplePolygon& polygon, const ExactPoint& origin,
                         const ExactPoint& direction) {
  auto ts = ray_contacts(polygon, origin, direction);
  Rational prev = 0;
  for (const Rational& t : ts) {
    Rational mid = (prev + t) / 2;
    if (point_in_polygon(polygon, at(origin, direction, mid)) !=
        Containment::kInterior) {
      break;
    }
    prev = t;
  }
  return at(origin, direction, prev);
}

}  // namespace vcvis
