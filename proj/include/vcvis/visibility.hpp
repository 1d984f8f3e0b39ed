#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "vcvis/polygon.hpp"

namespace vcvis {

enum class Metric { kL1, kL2 };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view text);  // "l1" / "l2"

struct Polyline {
  std::vector<ExactPoint> points;
};

// Triangulation plus dual graph, built once per polygon and read-only
// afterwards, so a single instance can serve concurrent queries.
class GeodesicContext {
 public:
  explicit GeodesicContext(SimplePolygon polygon);

  const SimplePolygon& polygon() const { return polygon_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  // Indices of all triangles whose closed region contains p.
  std::vector<std::size_t> locate(const ExactPoint& p) const;

  // Euclidean shortest path inside the polygon (funnel algorithm over the
  // triangle sleeve). Throws kPointOutsidePolygon.
  Polyline geodesic(const ExactPoint& p, const ExactPoint& q) const;
  // Same, with both endpoints already located.
  Polyline geodesic(const ExactPoint& p, const std::vector<std::size_t>& p_triangles,
                    const ExactPoint& q, const std::vector<std::size_t>& q_triangles) const;

 private:
  SimplePolygon polygon_;
  std::vector<Triangle> triangles_;
  // neighbors_[t][k]: triangle across edge (corner k, corner k+1), or -1.
  std::vector<std::array<long, 3>> neighbors_;
  struct Box {
    Rational lo_x, hi_x, lo_y, hi_y;
  };
  std::vector<Box> boxes_;
};

// Closed segment pq inside the closed polygon. Throws kPointOutsidePolygon.
bool l2_visible(const SimplePolygon& polygon, const ExactPoint& p,
                const ExactPoint& q);

Polyline geodesic(const SimplePolygon& polygon, const ExactPoint& p,
                  const ExactPoint& q);

// Both coordinate sequences are monotone (non-strictly).
bool is_xy_monotone(const Polyline& path);

// p and q are L1-visible when the Euclidean geodesic between them is
// x- and y-monotone; such a path is a shortest L1 path.
bool l1_visible(const GeodesicContext& context, const ExactPoint& p,
                const ExactPoint& q);
bool l1_visible(const SimplePolygon& polygon, const ExactPoint& p,
                const ExactPoint& q);

bool visible(const GeodesicContext& context, const ExactPoint& p,
             const ExactPoint& q, Metric metric);

// Window segments of p's visibility polygon: from each visible reflex vertex
// grazed by the sight line, continuing away from p to the boundary.
std::vector<Segment> l2_windows(const SimplePolygon& polygon, const ExactPoint& p);

// Throws kPointOutsidePolygon or kPointOnBoundary.
SimplePolygon l2_visibility_polygon(const SimplePolygon& polygon,
                                    const ExactPoint& p);

}  // namespace vcvis
