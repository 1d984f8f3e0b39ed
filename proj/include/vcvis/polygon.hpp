#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "vcvis/geometry.hpp"

namespace vcvis {

// A validated simple polygon with counterclockwise vertex order. The closed
// region (boundary included) is what "inside" means throughout the library.
class SimplePolygon {
 public:
  const std::vector<ExactPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const ExactPoint& operator[](std::size_t i) const { return vertices_[i]; }
  const ExactPoint& vertex(std::size_t i) const {
    return vertices_[i % vertices_.size()];
  }
  std::size_t next(std::size_t i) const { return (i + 1) % vertices_.size(); }
  std::size_t prev(std::size_t i) const {
    return (i + vertices_.size() - 1) % vertices_.size();
  }
  Segment edge(std::size_t i) const { return {vertices_[i], vertex(i + 1)}; }

  // No three vertices collinear, and two vertices share an x- or
  // y-coordinate only if they are joined by an edge.
  bool general_position() const { return general_position_; }

  friend bool operator==(const SimplePolygon& a, const SimplePolygon& b) {
    return a.vertices_ == b.vertices_;
  }

  // Skips the O(n^2) simplicity check. The caller guarantees a simple,
  // counterclockwise vertex cycle (used for faces of a subdivision).
  static SimplePolygon trusted(std::vector<ExactPoint> ccw_vertices);

 private:
  friend SimplePolygon validate_polygon(std::vector<ExactPoint> vertices);
  std::vector<ExactPoint> vertices_;
  bool general_position_ = false;
};

// Throws Error with kTooFewVertices, kRepeatedVertex or kNotSimple (message
// names the offending edge pair). Clockwise input is reversed.
SimplePolygon validate_polygon(std::vector<ExactPoint> vertices);

bool compute_general_position(std::span<const ExactPoint> vertices);

enum class Containment { kInterior, kBoundary, kExterior };

Containment point_in_polygon(const SimplePolygon& polygon, const ExactPoint& p);
inline bool inside_closed(const SimplePolygon& polygon, const ExactPoint& p) {
  return point_in_polygon(polygon, p) != Containment::kExterior;
}

// Twice the signed shoelace area of a vertex cycle.
Rational twice_signed_area(std::span<const ExactPoint> vertices);
Rational polygon_area(const SimplePolygon& polygon);

using Triangle = std::array<std::size_t, 3>;

// Ear clipping; n - 2 counterclockwise triangles of positive area indexing
// into polygon.vertices().
std::vector<Triangle> triangulate(const SimplePolygon& polygon);

}  // namespace vcvis
