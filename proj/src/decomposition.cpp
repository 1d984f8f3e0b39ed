#include "vcvis/decomposition.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "vcvis/error.hpp"
#include "vcvis/subdivision.hpp"

namespace vcvis {

PointSet PointSet::from_positions(std::vector<ExactPoint> positions) {
  PointSet out;
  int label = 1;
  for (auto& p : positions) out.points.push_back({label++, std::move(p)});
  return out;
}

std::vector<int> signature_labels(Signature s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (s & (Signature{1} << i)) out.push_back(i + 1);
  }
  return out;
}

std::string format_signature(Signature s) {
  std::string out = "{";
  bool first = true;
  for (int label : signature_labels(s)) {
    if (!first) out += ",";
    out += std::to_string(label);
    first = false;
  }
  return out + "}";
}

ExactPoint face_representative(const SimplePolygon& piece) {
  const auto& v = piece.vertices();
  const Triangle* best = nullptr;
  Rational best_area;
  auto triangles = triangulate(piece);
  for (const Triangle& t : triangles) {
    Rational area = cross3(v[t[0]], v[t[1]], v[t[2]]);
    if (best == nullptr || area > best_area) {
      best = &t;
      best_area = area;
    }
  }
  const ExactPoint& a = v[(*best)[0]];
  const ExactPoint& b = v[(*best)[1]];
  const ExactPoint& c = v[(*best)[2]];
  Rational third(1, 3);
  return {Rational((a.x + b.x + c.x) * third), Rational((a.y + b.y + c.y) * third)};
}

void validate_point_set(const SimplePolygon& polygon, const PointSet& points) {
  if (points.size() > kMaxPoints) {
    throw Error(ErrorCode::kInvalidArgument,
                "at most " + std::to_string(kMaxPoints) + " points are supported");
  }
  std::set<ExactPoint> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const LabeledPoint& lp = points.points[i];
    if (lp.label != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::kInvalidArgument, "point labels must be 1..n in order");
    }
    std::ostringstream where;
    where << "point " << lp.label << " " << lp.position;
    switch (point_in_polygon(polygon, lp.position)) {
      case Containment::kExterior:
        throw Error(ErrorCode::kPointOutsidePolygon, where.str() + " is outside the polygon");
      case Containment::kBoundary:
        throw Error(ErrorCode::kPointOnBoundary, where.str() + " lies on the boundary");
      case Containment::kInterior:
        break;
    }
    if (!seen.insert(lp.position).second) {
      throw Error(ErrorCode::kValidationError, where.str() + " is repeated");
    }
  }
}

namespace {

std::vector<CutRef> refs_for(const std::vector<int>& tags, Metric metric,
                             const std::vector<L1Cut>& cuts) {
  std::vector<CutRef> out;
  for (int tag : tags) {
    CutRef ref{tag, std::nullopt};
    if (metric == Metric::kL1) ref.direction = cuts[static_cast<std::size_t>(tag)].label;
    out.push_back(ref);
  }
  return out;
}

bool ref_less(const CutRef& l, const CutRef& r) {
  if (l.cut != r.cut) return l.cut < r.cut;
  return l.direction < r.direction;
}

}  // namespace

FaceDecomposition decompose(const SimplePolygon& polygon, Metric metric,
                            const PointSet& points) {
  FaceDecomposition dec;
  dec.metric = metric;
  std::vector<Chord> chords;
  if (metric == Metric::kL1) {
    dec.cuts = extract_cuts(polygon);
    for (const L1Cut& cut : dec.cuts) {
      for (const Segment& s : cut.chords) chords.push_back({s, cut.id});
    }
  } else {
    validate_point_set(polygon, points);
    for (const LabeledPoint& lp : points.points) {
      for (Segment& w : l2_windows(polygon, lp.position)) {
        chords.push_back({w, lp.label});
        dec.windows.push_back(std::move(w));
      }
    }
  }

  Subdivision sub = subdivide(polygon, chords);
  dec.faces.reserve(sub.faces.size());
  for (auto& cycle : sub.faces) {
    Face face{SimplePolygon::trusted(std::move(cycle)), {}, 0, {}};
    face.representative = face_representative(face.boundary);
    dec.faces.push_back(std::move(face));
  }
  for (SharedEdge& e : sub.shared) {
    Adjacency adj;
    adj.a = std::min(e.left_face, e.right_face);
    adj.b = std::max(e.left_face, e.right_face);
    adj.segment = std::move(e.segment);
    adj.cuts = refs_for(e.tags, metric, dec.cuts);
    for (std::size_t f : {adj.a, adj.b}) {
      auto& inc = dec.faces[f].incident;
      inc.insert(inc.end(), adj.cuts.begin(), adj.cuts.end());
    }
    dec.adjacency.push_back(std::move(adj));
  }
  for (Face& face : dec.faces) {
    std::sort(face.incident.begin(), face.incident.end(), ref_less);
    face.incident.erase(std::unique(face.incident.begin(), face.incident.end()),
                        face.incident.end());
  }
  std::stable_sort(dec.adjacency.begin(), dec.adjacency.end(),
                   [](const Adjacency& l, const Adjacency& r) {
                     return std::tie(l.a, l.b) < std::tie(r.a, r.b);
                   });
  return dec;
}

SignatureEvaluator::SignatureEvaluator(const GeodesicContext& context,
                                       const PointSet& points, Metric metric)
    : context_(context), points_(points), metric_(metric) {
  if (metric_ == Metric::kL1) {
    for (const LabeledPoint& lp : points_.points) {
      locations_.push_back(context_.locate(lp.position));
    }
  }
}

Signature SignatureEvaluator::operator()(const ExactPoint& q) const {
  std::vector<std::size_t> here;
  if (metric_ == Metric::kL1) here = context_.locate(q);
  if (here.empty() && !inside_closed(context_.polygon(), q)) {
    std::ostringstream msg;
    msg << q << " is outside the polygon";
    throw Error(ErrorCode::kPointOutsidePolygon, msg.str());
  }
  Signature s = 0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const ExactPoint& p = points_.points[i].position;
    bool seen = metric_ == Metric::kL1
                    ? is_xy_monotone(context_.geodesic(q, here, p, locations_[i]))
                    : l2_visible(context_.polygon(), q, p);
    if (seen) s |= Signature{1} << i;
  }
  return s;
}

Signature signature_of(const GeodesicContext& context, const PointSet& points,
                       const ExactPoint& q, Metric metric) {
  return SignatureEvaluator(context, points, metric)(q);
}

Signature signature_of(const SimplePolygon& polygon, const PointSet& points,
                       const ExactPoint& q, Metric metric) {
  return signature_of(GeodesicContext(polygon), points, q, metric);
}

namespace {

void check_off_chords(const FaceDecomposition& dec, const PointSet& points) {
  for (const LabeledPoint& lp : points.points) {
    bool hit = false;
    int which = -1;
    for (const L1Cut& cut : dec.cuts) {
      if (on_cut(cut, lp.position)) {
        hit = true;
        which = cut.id;
        break;
      }
    }
    for (const Segment& w : dec.windows) {
      if (!hit && on_segment(lp.position, w.a, w.b)) hit = true;
    }
    if (hit) {
      std::ostringstream msg;
      msg << "point " << lp.label << " " << lp.position << " lies on ";
      if (which >= 0) {
        msg << "cut " << which;
      } else {
        msg << "a window";
      }
      throw Error(ErrorCode::kPointOnCut, msg.str());
    }
  }
}

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
// owned by exactly one worker, so results written per index need no locking.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

FaceDecomposition signature_map(const SimplePolygon& polygon, const PointSet& points,
                                Metric metric, const SignatureOptions& options) {
  validate_point_set(polygon, points);
  FaceDecomposition dec = decompose(polygon, metric, points);
  check_off_chords(dec, points);

  const GeodesicContext context(polygon);
  const SignatureEvaluator evaluate(context, points, metric);
  parallel_for(dec.faces.size(), options.threads, [&](std::size_t i) {
    dec.faces[i].signature = evaluate(dec.faces[i].representative);
  });
  if (options.midpoint_signatures) {
    parallel_for(dec.adjacency.size(), options.threads, [&](std::size_t i) {
      Adjacency& adj = dec.adjacency[i];
      adj.midpoint_signature = evaluate(midpoint(adj.segment.a, adj.segment.b));
    });
  }

  std::set<Signature> achieved;
  for (const Face& f : dec.faces) achieved.insert(f.signature);
  dec.achieved.assign(achieved.begin(), achieved.end());
  dec.signatures_filled = true;
  return dec;
}

std::vector<std::vector<std::size_t>> region_of(const FaceDecomposition& dec,
                                                Signature t) {
  const std::size_t n = dec.faces.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Adjacency& adj : dec.adjacency) {
    if (dec.faces[adj.a].signature != t || dec.faces[adj.b].signature != t) continue;
    if (adj.midpoint_signature && *adj.midpoint_signature != t) continue;
    std::size_t ra = find(adj.a), rb = find(adj.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> group_of(n, -1);
  for (std::size_t f = 0; f < n; ++f) {
    if (dec.faces[f].signature != t) continue;
    std::size_t root = find(f);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(group_of[root])].push_back(f);
  }
  return groups;
}

}  // namespace vcvis
