#include "vcvis/visibility.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "vcvis/error.hpp"
#include "vcvis/raycast.hpp"
#include "vcvis/subdivision.hpp"

namespace vcvis {

std::string_view to_string(Metric metric) {
  return metric == Metric::kL1 ? "l1" : "l2";
}

Metric parse_metric(std::string_view text) {
  if (text == "l1" || text == "L1") return Metric::kL1;
  if (text == "l2" || text == "L2") return Metric::kL2;
  throw Error(ErrorCode::kParseError, "unknown metric \"" + std::string(text) + "\"");
}

namespace {

[[noreturn]] void outside(const ExactPoint& p) {
  std::ostringstream msg;
  msg << p << " is outside the polygon";
  throw Error(ErrorCode::kPointOutsidePolygon, msg.str());
}

// Drops repeated points and vertices the path passes straight through.
std::vector<ExactPoint> simplify_path(std::vector<ExactPoint> raw) {
  std::vector<ExactPoint> out;
  out.reserve(raw.size());
  for (auto& p : raw) {
    if (!out.empty() && out.back() == p) continue;
    while (out.size() >= 2) {
      const ExactPoint& a = out[out.size() - 2];
      const ExactPoint& m = out.back();
      if (sign(cross3(a, m, p)) == 0 && sign(dot(m - a, p - m)) > 0) {
        out.pop_back();
      } else {
        break;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

struct Portal {
  ExactPoint left;
  ExactPoint right;
};

// Funnel walk over the portal sequence; the first and last portals are the
// degenerate (p, p) and (q, q). Collinear contacts leave the funnel at zero
// width instead of restarting, so the apex only ever moves to a vertex where
// the path actually turns.
std::vector<ExactPoint> funnel(const std::vector<Portal>& portals) {
  std::vector<ExactPoint> path{portals.front().left};
  ExactPoint apex = portals.front().left;
  ExactPoint left = apex;
  ExactPoint right = apex;
  std::size_t apex_index = 0, left_index = 0, right_index = 0;

  for (std::size_t i = 1; i < portals.size(); ++i) {
    const ExactPoint& pl = portals[i].left;
    const ExactPoint& pr = portals[i].right;

    if (sign(cross3(apex, right, pr)) >= 0) {
      if (apex == right || sign(cross3(apex, left, pr)) <= 0) {
        right = pr;
        right_index = i;
      } else {
        path.push_back(left);
        apex = left;
        apex_index = left_index;
        right = apex;
        right_index = apex_index;
        i = apex_index;
        continue;
      }
    }

    if (sign(cross3(apex, left, pl)) <= 0) {
      if (apex == left || sign(cross3(apex, right, pl)) >= 0) {
        left = pl;
        left_index = i;
      } else {
        path.push_back(right);
        apex = right;
        apex_index = right_index;
        left = apex;
        left_index = apex_index;
        i = apex_index;
        continue;
      }
    }
  }
  path.push_back(portals.back().left);
  return path;
}

}  // namespace

GeodesicContext::GeodesicContext(SimplePolygon polygon)
    : polygon_(std::move(polygon)), triangles_(triangulate(polygon_)) {
  neighbors_.assign(triangles_.size(), {-1, -1, -1});
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, int>> open;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      auto key = std::minmax(triangles_[t][k], triangles_[t][(k + 1) % 3]);
      auto it = open.find(key);
      if (it == open.end()) {
        open.emplace(key, std::make_pair(t, k));
      } else {
        neighbors_[t][k] = static_cast<long>(it->second.first);
        neighbors_[it->second.first][it->second.second] = static_cast<long>(t);
        open.erase(it);
      }
    }
  }
  const auto& v = polygon_.vertices();
  boxes_.reserve(triangles_.size());
  for (const Triangle& t : triangles_) {
    const ExactPoint& a = v[t[0]];
    const ExactPoint& b = v[t[1]];
    const ExactPoint& c = v[t[2]];
    boxes_.push_back({std::min({a.x, b.x, c.x}), std::max({a.x, b.x, c.x}),
                      std::min({a.y, b.y, c.y}), std::max({a.y, b.y, c.y})});
  }
}

std::vector<std::size_t> GeodesicContext::locate(const ExactPoint& p) const {
  std::vector<std::size_t> out;
  const auto& v = polygon_.vertices();
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const Box& box = boxes_[t];
    if (p.x < box.lo_x || p.x > box.hi_x || p.y < box.lo_y || p.y > box.hi_y) continue;
    const ExactPoint& a = v[triangles_[t][0]];
    const ExactPoint& b = v[triangles_[t][1]];
    const ExactPoint& c = v[triangles_[t][2]];
    if (sign(cross3(a, b, p)) >= 0 && sign(cross3(b, c, p)) >= 0 &&
        sign(cross3(c, a, p)) >= 0) {
      out.push_back(t);
    }
  }
  return out;
}

Polyline GeodesicContext::geodesic(const ExactPoint& p, const ExactPoint& q) const {
  return geodesic(p, locate(p), q, locate(q));
}

Polyline GeodesicContext::geodesic(const ExactPoint& p,
                                   const std::vector<std::size_t>& sources,
                                   const ExactPoint& q,
                                   const std::vector<std::size_t>& targets) const {
  if (sources.empty()) outside(p);
  if (targets.empty()) outside(q);
  if (p == q) return {{p}};

  const std::size_t n = triangles_.size();
  constexpr long kUnseen = -2;
  std::vector<long> parent(n, kUnseen);
  std::vector<bool> is_target(n, false);
  for (auto t : targets) is_target[t] = true;
  std::deque<std::size_t> queue;
  for (auto s : sources) {
    parent[s] = -1;
    queue.push_back(s);
  }
  long found = -1;
  while (!queue.empty()) {
    std::size_t t = queue.front();
    queue.pop_front();
    if (is_target[t]) {
      found = static_cast<long>(t);
      break;
    }
    for (long nb : neighbors_[t]) {
      if (nb >= 0 && parent[nb] == kUnseen) {
        parent[nb] = static_cast<long>(t);
        queue.push_back(static_cast<std::size_t>(nb));
      }
    }
  }
  if (found < 0) throw std::logic_error("geodesic: disconnected triangulation");

  std::vector<std::size_t> sleeve;
  for (long t = found; t >= 0; t = parent[t]) sleeve.push_back(static_cast<std::size_t>(t));
  std::reverse(sleeve.begin(), sleeve.end());
  if (sleeve.size() == 1) return {{p, q}};

  const auto& v = polygon_.vertices();
  std::vector<Portal> portals;
  portals.reserve(sleeve.size() + 1);
  portals.push_back({p, p});
  for (std::size_t i = 0; i + 1 < sleeve.size(); ++i) {
    const Triangle& tri = triangles_[sleeve[i]];
    for (int k = 0; k < 3; ++k) {
      if (neighbors_[sleeve[i]][k] == static_cast<long>(sleeve[i + 1])) {
        // The triangle lies to the left of corner k -> corner k+1, so
        // crossing that edge outward has corner k+1 on the left.
        portals.push_back({v[tri[(k + 1) % 3]], v[tri[k]]});
        break;
      }
    }
  }
  portals.push_back({q, q});
  return {simplify_path(funnel(portals))};
}

bool l2_visible(const SimplePolygon& polygon, const ExactPoint& p,
                const ExactPoint& q) {
  if (!inside_closed(polygon, p)) outside(p);
  if (!inside_closed(polygon, q)) outside(q);
  if (p == q) return true;
  const Segment pq{p, q};
  std::vector<std::pair<Rational, ExactPoint>> contacts;
  contacts.emplace_back(Rational(0), p);
  contacts.emplace_back(projection_key(p, q, q), q);
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    auto hit = segment_intersection(pq, polygon.edge(i));
    if (const auto* pt = std::get_if<ExactPoint>(&hit)) {
      contacts.emplace_back(projection_key(p, q, *pt), *pt);
    } else if (const auto* seg = std::get_if<Segment>(&hit)) {
      contacts.emplace_back(projection_key(p, q, seg->a), seg->a);
      contacts.emplace_back(projection_key(p, q, seg->b), seg->b);
    }
  }
  std::sort(contacts.begin(), contacts.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  for (std::size_t k = 1; k < contacts.size(); ++k) {
    if (contacts[k].first == contacts[k - 1].first) continue;
    if (point_in_polygon(polygon, midpoint(contacts[k - 1].second, contacts[k].second)) ==
        Containment::kExterior) {
      return false;
    }
  }
  return true;
}

Polyline geodesic(const SimplePolygon& polygon, const ExactPoint& p,
                  const ExactPoint& q) {
  return GeodesicContext(polygon).geodesic(p, q);
}

bool is_xy_monotone(const Polyline& path) {
  const auto& pts = path.points;
  auto monotone = [&](auto coord) {
    bool up = false, down = false;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      int s = sign(coord(pts[i]) - coord(pts[i - 1]));
      up |= s > 0;
      down |= s < 0;
    }
    return !(up && down);
  };
  return monotone([](const ExactPoint& p) -> const Rational& { return p.x; }) &&
         monotone([](const ExactPoint& p) -> const Rational& { return p.y; });
}

bool l1_visible(const GeodesicContext& context, const ExactPoint& p,
                const ExactPoint& q) {
  return is_xy_monotone(context.geodesic(p, q));
}

bool l1_visible(const SimplePolygon& polygon, const ExactPoint& p,
                const ExactPoint& q) {
  return l1_visible(GeodesicContext(polygon), p, q);
}

bool visible(const GeodesicContext& context, const ExactPoint& p,
             const ExactPoint& q, Metric metric) {
  if (metric == Metric::kL1) return l1_visible(context, p, q);
  return l2_visible(context.polygon(), p, q);
}

std::vector<Segment> l2_windows(const SimplePolygon& polygon, const ExactPoint& p) {
  std::vector<Segment> windows;
  for (const ExactPoint& r : polygon.vertices()) {
    if (r == p || !l2_visible(polygon, p, r)) continue;
    ExactPoint end = extend_inside(polygon, r, r - p);
    if (!(end == r)) windows.push_back({r, end});
  }
  return windows;
}

SimplePolygon l2_visibility_polygon(const SimplePolygon& polygon,
                                    const ExactPoint& p) {
  auto where = point_in_polygon(polygon, p);
  if (where == Containment::kExterior) outside(p);
  if (where == Containment::kBoundary) {
    std::ostringstream msg;
    msg << p << " lies on the boundary";
    throw Error(ErrorCode::kPointOnBoundary, msg.str());
  }
  std::vector<Chord> chords;
  for (auto& w : l2_windows(polygon, p)) chords.push_back({std::move(w), 0});
  Subdivision sub = subdivide(polygon, chords);
  for (auto& face : sub.faces) {
    SimplePolygon piece = SimplePolygon::trusted(face);
    if (point_in_polygon(piece, p) == Containment::kInterior) return piece;
  }
  throw std::logic_error("l2_visibility_polygon: no face contains the query point");
}

}  // namespace vcvis
