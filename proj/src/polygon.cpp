#include "vcvis/polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "vcvis/error.hpp"

namespace vcvis {

SimplePolygon SimplePolygon::trusted(std::vector<ExactPoint> ccw_vertices) {
  SimplePolygon polygon;
  polygon.general_position_ = compute_general_position(ccw_vertices);
  polygon.vertices_ = std::move(ccw_vertices);
  return polygon;
}

Rational twice_signed_area(std::span<const ExactPoint> vertices) {
  Rational sum = 0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ExactPoint& a = vertices[i];
    const ExactPoint& b = vertices[(i + 1) % n];
    sum += a.x * b.y - a.y * b.x;
  }
  return sum;
}

Rational polygon_area(const SimplePolygon& polygon) {
  return twice_signed_area(polygon.vertices()) / 2;
}

namespace {

bool collinear_triple_exists(std::span<const ExactPoint> vertices) {
  const std::size_t n = vertices.size();
  std::vector<ExactPoint> dirs;
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    dirs.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      ExactPoint d = vertices[j] - vertices[i];
      // Fold into the upper half-plane so that opposite directions coincide.
      if (d.y < 0 || (d.y == 0 && d.x < 0)) d = ExactPoint(-d.x, -d.y);
      dirs.push_back(std::move(d));
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const ExactPoint& u, const ExactPoint& v) {
                return sign(cross(u, v)) > 0;
              });
    for (std::size_t k = 1; k < dirs.size(); ++k) {
      if (sign(cross(dirs[k - 1], dirs[k])) == 0) return true;
    }
  }
  return false;
}

bool shared_coordinate_only_on_edges(std::span<const ExactPoint> vertices,
                                     bool use_x) {
  const std::size_t n = vertices.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto coord = [&](std::size_t i) -> const Rational& {
    return use_x ? vertices[i].x : vertices[i].y;
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return coord(a) < coord(b); });
  for (std::size_t k = 0; k < n;) {
    std::size_t e = k + 1;
    while (e < n && coord(order[e]) == coord(order[k])) ++e;
    for (std::size_t a = k; a < e; ++a) {
      for (std::size_t b = a + 1; b < e; ++b) {
        std::size_t i = order[a], j = order[b];
        bool adjacent = (i + 1) % n == j || (j + 1) % n == i;
        if (!adjacent) return false;
      }
    }
    k = e;
  }
  return true;
}

}  // namespace

bool compute_general_position(std::span<const ExactPoint> vertices) {
  if (vertices.size() < 3) return false;
  return shared_coordinate_only_on_edges(vertices, true) &&
         shared_coordinate_only_on_edges(vertices, false) &&
         !collinear_triple_exists(vertices);
}

SimplePolygon validate_polygon(std::vector<ExactPoint> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) {
    throw Error(ErrorCode::kTooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  {
    std::map<ExactPoint, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = seen.emplace(vertices[i], i);
      if (!inserted) {
        std::ostringstream msg;
        msg << "vertex " << i << " repeats vertex " << it->second << " at "
            << vertices[i];
        throw Error(ErrorCode::kRepeatedVertex, msg.str());
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Segment ei{vertices[i], vertices[(i + 1) % n]};
    for (std::size_t j = i + 1; j < n; ++j) {
      Segment ej{vertices[j], vertices[(j + 1) % n]};
      auto hit = segment_intersection(ei, ej);
      if (std::holds_alternative<NoIntersection>(hit)) continue;
      const bool j_follows = j == i + 1;
      const bool i_follows = (j + 1) % n == i;
      if (j_follows || i_follows) {
        // Consecutive edges may only share their common endpoint.
        const ExactPoint& shared = j_follows ? ej.a : ei.a;
        if (const auto* pt = std::get_if<ExactPoint>(&hit); pt && *pt == shared) {
          continue;
        }
      }
      std::ostringstream msg;
      msg << "edges " << i << " and " << j << " intersect";
      throw Error(ErrorCode::kNotSimple, msg.str());
    }
  }
  if (sign(twice_signed_area(vertices)) < 0) {
    std::reverse(vertices.begin(), vertices.end());
  }
  return SimplePolygon::trusted(std::move(vertices));
}

Containment point_in_polygon(const SimplePolygon& polygon, const ExactPoint& p) {
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const ExactPoint& a = v[i];
    const ExactPoint& b = v[(i + 1) % n];
    if (on_segment(p, a, b)) return Containment::kBoundary;
    const bool a_above = a.y > p.y;
    const bool b_above = b.y > p.y;
    if (a_above == b_above) continue;
    // Edge straddles the horizontal line through p; count it when it
    // crosses strictly to the right of p.
    int s = sign(cross3(a, b, p));
    if (b_above ? s > 0 : s < 0) inside = !inside;
  }
  return inside ? Containment::kInterior : Containment::kExterior;
}

std::vector<Triangle> triangulate(const SimplePolygon& polygon) {
  const auto& v = polygon.vertices();
  const std::size_t n = v.size();
  std::vector<Triangle> out;
  out.reserve(n - 2);
  std::vector<std::size_t> ring(n);
  std::iota(ring.begin(), ring.end(), 0);

  auto is_ear = [&](std::size_t k) {
    const std::size_t m = ring.size();
    std::size_t ia = ring[(k + m - 1) % m], ib = ring[k], ic = ring[(k + 1) % m];
    const ExactPoint& a = v[ia];
    const ExactPoint& b = v[ib];
    const ExactPoint& c = v[ic];
    if (sign(cross3(a, b, c)) <= 0) return false;
    for (std::size_t idx : ring) {
      if (idx == ia || idx == ib || idx == ic) continue;
      const ExactPoint& p = v[idx];
      // Closed triangle test; any vertex touching the triangle (including
      // the new diagonal ac) disqualifies the ear.
      if (sign(cross3(a, b, p)) >= 0 && sign(cross3(b, c, p)) >= 0 &&
          sign(cross3(c, a, p)) >= 0) {
        return false;
      }
    }
    return true;
  };

  std::size_t k = 0;
  std::size_t misses = 0;
  while (ring.size() > 3) {
    const std::size_t m = ring.size();
    k %= m;
    if (is_ear(k)) {
      out.push_back({ring[(k + m - 1) % m], ring[k], ring[(k + 1) % m]});
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
      if (k > 0) --k;
      misses = 0;
    } else {
      ++k;
      if (++misses > m) {
        throw std::logic_error("triangulate: no ear found (polygon not simple?)");
      }
    }
  }
  out.push_back({ring[0], ring[1], ring[2]});
  return out;
}

}  // namespace vcvis
