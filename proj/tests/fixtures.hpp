#pragma once

#include <string>
#include <vector>

#include "vcvis/polygon.hpp"
#include "vcvis/rational.hpp"

namespace vcvis::testing {

inline ExactPoint pt(const std::string& x, const std::string& y) {
  return {parse_rational(x), parse_rational(y)};
}

inline SimplePolygon unit_square() {
  return validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline SimplePolygon u4() {
  return validate_polygon(
      {{0, 0}, {4, 0}, {4, 4}, {3, 4}, {3, 1}, {1, 1}, {1, 4}, {0, 4}});
}

inline Rational q(const char* text) { return parse_rational(text); }

}  // namespace vcvis::testing
