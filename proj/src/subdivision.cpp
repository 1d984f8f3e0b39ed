#include "vcvis/subdivision.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace vcvis {

namespace {

struct RawSegment {
  Segment segment;
  int tag;  // -1 for polygon edges
  std::vector<ExactPoint> cuts;
};

void add_hit(const SegmentIntersection& hit, RawSegment& s, RawSegment& t) {
  if (const auto* p = std::get_if<ExactPoint>(&hit)) {
    s.cuts.push_back(*p);
    t.cuts.push_back(*p);
  } else if (const auto* seg = std::get_if<Segment>(&hit)) {
    s.cuts.push_back(seg->a);
    s.cuts.push_back(seg->b);
    t.cuts.push_back(seg->a);
    t.cuts.push_back(seg->b);
  }
}

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half_plane(const ExactPoint& d) {
  return (sign(d.y) > 0 || (sign(d.y) == 0 && sign(d.x) > 0)) ? 0 : 1;
}

bool angle_less(const ExactPoint& u, const ExactPoint& v) {
  int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return sign(cross(u, v)) > 0;
}

}  // namespace

Subdivision subdivide(const SimplePolygon& polygon, std::span<const Chord> chords) {
  std::vector<RawSegment> segs;
  segs.reserve(polygon.size() + chords.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    segs.push_back({polygon.edge(i), -1, {}});
  }
  for (const Chord& c : chords) {
    if (c.segment.a == c.segment.b) continue;
    segs.push_back({c.segment, c.tag, {}});
  }
  const std::size_t n_edges = polygon.size();
  for (std::size_t i = n_edges; i < segs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      add_hit(segment_intersection(segs[i].segment, segs[j].segment), segs[i],
              segs[j]);
    }
  }

  std::map<ExactPoint, std::size_t> vertex_ids;
  std::vector<ExactPoint> positions;
  auto vertex_id = [&](const ExactPoint& p) {
    auto [it, inserted] = vertex_ids.emplace(p, positions.size());
    if (inserted) positions.push_back(p);
    return it->second;
  };

  struct EdgeRec {
    std::size_t u, v;
    std::vector<int> tags;
  };
  std::vector<EdgeRec> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_ids;

  for (RawSegment& s : segs) {
    const ExactPoint& a = s.segment.a;
    const ExactPoint& b = s.segment.b;
    s.cuts.push_back(a);
    s.cuts.push_back(b);
    std::vector<std::pair<Rational, ExactPoint>> keyed;
    keyed.reserve(s.cuts.size());
    for (const ExactPoint& p : s.cuts) keyed.emplace_back(projection_key(a, b, p), p);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t k = 1; k < keyed.size(); ++k) {
      if (keyed[k].first == keyed[k - 1].first) continue;
      std::size_t u = vertex_id(keyed[k - 1].second);
      std::size_t v = vertex_id(keyed[k].second);
      auto key = std::minmax(u, v);
      auto [it, inserted] = edge_ids.emplace(key, edges.size());
      if (inserted) edges.push_back({key.first, key.second, {}});
      edges[it->second].tags.push_back(s.tag);
    }
  }

  // Half-edge 2e runs u -> v, 2e + 1 runs v -> u.
  const std::size_t n_half = edges.size() * 2;
  auto origin = [&](std::size_t h) { return h % 2 == 0 ? edges[h / 2].u : edges[h / 2].v; };
  auto dest = [&](std::size_t h) { return h % 2 == 0 ? edges[h / 2].v : edges[h / 2].u; };
  std::vector<ExactPoint> direction(n_half);
  std::vector<std::vector<std::size_t>> outgoing(positions.size());
  for (std::size_t h = 0; h < n_half; ++h) {
    direction[h] = positions[dest(h)] - positions[origin(h)];
    outgoing[origin(h)].push_back(h);
  }
  std::vector<std::size_t> rank(n_half);
  for (auto& list : outgoing) {
    std::sort(list.begin(), list.end(), [&](std::size_t l, std::size_t r) {
      return angle_less(direction[l], direction[r]);
    });
    for (std::size_t k = 0; k < list.size(); ++k) rank[list[k]] = k;
  }
  auto next = [&](std::size_t h) {
    std::size_t twin = h ^ 1U;
    const auto& list = outgoing[dest(h)];
    return list[(rank[twin] + list.size() - 1) % list.size()];
  };

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cycle_of(n_half, kNone);
  std::vector<std::vector<ExactPoint>> cycles;
  std::vector<bool> bounded;
  for (std::size_t start = 0; start < n_half; ++start) {
    if (cycle_of[start] != kNone) continue;
    std::vector<ExactPoint> cycle;
    std::size_t h = start;
    do {
      cycle_of[h] = cycles.size();
      cycle.push_back(positions[origin(h)]);
      h = next(h);
    } while (h != start);
    bounded.push_back(sign(twice_signed_area(cycle)) > 0);
    cycles.push_back(std::move(cycle));
  }

  // Canonical face order, independent of chord order.
  std::vector<std::size_t> face_cycles;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (!bounded[c]) continue;
    auto& cyc = cycles[c];
    auto lowest = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), lowest, cyc.end());
    face_cycles.push_back(c);
  }
  std::sort(face_cycles.begin(), face_cycles.end(), [&](std::size_t l, std::size_t r) {
    return std::lexicographical_compare(cycles[l].begin(), cycles[l].end(),
                                        cycles[r].begin(), cycles[r].end());
  });
  std::vector<std::size_t> face_index(cycles.size(), kNone);
  Subdivision out;
  for (std::size_t k = 0; k < face_cycles.size(); ++k) {
    face_index[face_cycles[k]] = k;
    out.faces.push_back(std::move(cycles[face_cycles[k]]));
  }

  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::vector<int> tags;
    for (int t : edges[e].tags) {
      if (t >= 0) tags.push_back(t);
    }
    if (tags.empty()) continue;
    std::size_t left = face_index[cycle_of[2 * e]];
    std::size_t right = face_index[cycle_of[2 * e + 1]];
    if (left == kNone || right == kNone || left == right) continue;
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    Segment seg{positions[edges[e].u], positions[edges[e].v]};
    if (seg.b < seg.a) {
      std::swap(seg.a, seg.b);
      std::swap(left, right);
    }
    out.shared.push_back({left, right, std::move(tags), std::move(seg)});
  }
  std::sort(out.shared.begin(), out.shared.end(), [](const SharedEdge& l, const SharedEdge& r) {
    if (l.left_face != r.left_face) return l.left_face < r.left_face;
    if (l.right_face != r.right_face) return l.right_face < r.right_face;
    if (!(l.segment.a == r.segment.a)) return l.segment.a < r.segment.a;
    return l.segment.b < r.segment.b;
  });
  return out;
}

}  // namespace vcvis
