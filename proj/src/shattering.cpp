#include "vcvis/shattering.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "vcvis/error.hpp"

namespace vcvis {

ShatterReport shatter_report(const FaceDecomposition& dec, std::size_t point_count) {
  ShatterReport r;
  r.point_count = point_count;
  for (std::size_t i = 0; i < dec.faces.size(); ++i) {
    Signature s = dec.faces[i].signature;
    if (r.witnesses.emplace(s, dec.faces[i].representative).second) {
      r.witness_faces.emplace(s, i);
    }
  }
  for (const auto& [s, p] : r.witnesses) r.achieved.push_back(s);
  const Signature total = full_signature(point_count);
  for (Signature s = 0;; ++s) {
    if (!r.witnesses.count(s)) r.missing.push_back(s);
    if (s == total) break;
  }
  r.shattered = r.missing.empty();
  return r;
}

ShatterReport shatter_check(const SimplePolygon& polygon, const PointSet& points,
                            Metric metric, const SignatureOptions& options) {
  SignatureOptions opts = options;
  opts.midpoint_signatures = false;
  return shatter_report(signature_map(polygon, points, metric, opts), points.size());
}

namespace {

std::string face_list(const std::vector<std::size_t>& faces) {
  std::string out;
  for (std::size_t f : faces) out += (out.empty() ? "" : ",") + std::to_string(f);
  return out;
}

LemmaReport empty_region(int lemma) {
  LemmaReport r;
  r.lemma = lemma;
  r.applicable = false;
  r.detail = "V(S) is empty";
  return r;
}

}  // namespace

LemmaReport verify_lemma1(const FaceDecomposition& dec, std::size_t point_count) {
  auto comps = region_of(dec, full_signature(point_count));
  if (comps.empty()) return empty_region(1);
  LemmaReport r;
  r.lemma = 1;
  r.holds = comps.size() == 1;
  r.detail = "V(S) has " + std::to_string(comps.size()) + " component(s)";
  if (!r.holds) {
    std::vector<std::size_t> faces;
    for (const auto& c : comps) faces.push_back(c.front());
    r.counterexample = faces;
  }
  return r;
}

LemmaReport verify_lemma2(const FaceDecomposition& dec, std::size_t point_count) {
  const Signature full = full_signature(point_count);
  if (region_of(dec, full).empty()) return empty_region(2);
  LemmaReport r;
  r.lemma = 2;
  std::size_t checked = 0;
  for (std::size_t k = 0; k < point_count; ++k) {
    const Signature t = full & ~(Signature{1} << k);
    for (const auto& comp : region_of(dec, t)) {
      ++checked;
      std::set<std::size_t> members(comp.begin(), comp.end());
      bool touches = std::any_of(dec.adjacency.begin(), dec.adjacency.end(),
                                 [&](const Adjacency& adj) {
                                   return (members.count(adj.a) &&
                                           dec.faces[adj.b].signature == full) ||
                                          (members.count(adj.b) &&
                                           dec.faces[adj.a].signature == full);
                                 });
      if (!touches && r.holds) {
        r.holds = false;
        r.counterexample = comp;
        r.detail = "component of V(S\\{" + std::to_string(k + 1) + "}) with faces " +
                   face_list(comp) + " does not touch V(S)";
      }
    }
  }
  if (r.holds) r.detail = std::to_string(checked) + " component(s) checked";
  return r;
}

LemmaReport verify_direction_bound(const FaceDecomposition& dec, std::size_t point_count) {
  const Signature full = full_signature(point_count);
  if (region_of(dec, full).empty()) return empty_region(3);
  LemmaReport r;
  r.lemma = 3;
  // direction -> point index -> cut ids (and the faces that showed it)
  std::map<Direction, std::map<std::size_t, std::set<int>>> seen;
  std::map<Direction, std::set<std::size_t>> faces;
  for (const Adjacency& adj : dec.adjacency) {
    Signature sa = dec.faces[adj.a].signature;
    Signature sb = dec.faces[adj.b].signature;
    if (sa != full && sb != full) continue;
    Signature other = sa == full ? sb : sa;
    Signature removed = full & ~other;
    if (other == full || std::popcount(removed) != 1) continue;
    std::size_t k = static_cast<std::size_t>(std::countr_zero(removed));
    for (const CutRef& ref : adj.cuts) {
      if (!ref.direction) continue;
      seen[*ref.direction][k].insert(ref.cut);
      faces[*ref.direction].insert(adj.a);
      faces[*ref.direction].insert(adj.b);
    }
  }
  std::ostringstream detail;
  for (const auto& [dir, per_point] : seen) {
    std::set<int> cuts;
    for (const auto& [k, ids] : per_point) cuts.insert(ids.begin(), ids.end());
    detail << (detail.tellp() > 0 ? "; " : "") << to_string(dir) << ": " << per_point.size()
           << " point(s), " << cuts.size() << " cut(s)";
    bool ok = per_point.size() <= 1 || (per_point.size() == 2 && cuts.size() == 1);
    if (!ok && r.holds) {
      r.holds = false;
      r.counterexample = std::vector<std::size_t>(faces[dir].begin(), faces[dir].end());
    }
  }
  r.detail = detail.str().empty() ? "no cut boundaries between V(S) and V(S\\{p})"
                                  : detail.str();
  return r;
}

namespace {

FaceDecomposition lemma_map(const SimplePolygon& polygon, const PointSet& points,
                            Metric metric) {
  return signature_map(polygon, points, metric);
}

}  // namespace

LemmaReport verify_lemma1(const SimplePolygon& polygon, const PointSet& points,
                          Metric metric) {
  return verify_lemma1(lemma_map(polygon, points, metric), points.size());
}

LemmaReport verify_lemma2(const SimplePolygon& polygon, const PointSet& points,
                          Metric metric) {
  return verify_lemma2(lemma_map(polygon, points, metric), points.size());
}

LemmaReport verify_direction_bound(const SimplePolygon& polygon, const PointSet& points) {
  return verify_direction_bound(lemma_map(polygon, points, Metric::kL1), points.size());
}

StaircaseGrid::StaircaseGrid(const SimplePolygon& polygon, const Rational& pitch)
    : pitch_(pitch) {
  if (sign(pitch) <= 0) throw Error(ErrorCode::kInvalidArgument, "pitch must be positive");
  const auto& v = polygon.vertices();
  Rational lo_x = v[0].x, hi_x = v[0].x, lo_y = v[0].y, hi_y = v[0].y;
  for (const auto& p : v) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  origin_ = {lo_x, lo_y};
  auto count = [&](const Rational& extent) {
    Rational cells = extent / pitch_;
    mpz_class whole = cells.get_num() / cells.get_den();
    if (Rational(whole) < cells) whole += 1;
    return whole.get_si();
  };
  columns_ = std::max(1L, count(hi_x - lo_x));
  rows_ = std::max(1L, count(hi_y - lo_y));
  inside_.assign(static_cast<std::size_t>(columns_ * rows_), 0);
  for (long j = 0; j < rows_; ++j) {
    for (long i = 0; i < columns_; ++i) {
      ExactPoint a{Rational(lo_x + i * pitch_), Rational(lo_y + j * pitch_)};
      ExactPoint b{Rational(a.x + pitch_), a.y};
      ExactPoint c{b.x, Rational(a.y + pitch_)};
      ExactPoint d{a.x, c.y};
      bool ok = inside_closed(polygon, a) && inside_closed(polygon, b) &&
                inside_closed(polygon, c) && inside_closed(polygon, d) &&
                l2_visible(polygon, a, b) && l2_visible(polygon, b, c) &&
                l2_visible(polygon, c, d) && l2_visible(polygon, d, a);
      if (ok) {
        for (const auto& p : v) {
          if (p.x > a.x && p.x < c.x && p.y > a.y && p.y < c.y) {
            ok = false;
            break;
          }
        }
      }
      inside_[static_cast<std::size_t>(j * columns_ + i)] = ok ? 1 : 0;
    }
  }
}

std::pair<long, long> StaircaseGrid::cell_of(const ExactPoint& p) const {
  auto index = [&](const Rational& offset, long limit) {
    Rational cells = offset / pitch_;
    mpz_class whole = cells.get_num() / cells.get_den();  // truncates toward zero
    if (sign(cells) < 0 && Rational(whole) != cells) whole -= 1;
    return std::clamp(whole.get_si(), 0L, limit - 1);
  };
  return {index(p.x - origin_.x, columns_), index(p.y - origin_.y, rows_)};
}

bool StaircaseGrid::usable(const ExactPoint& p) const {
  auto [i, j] = cell_of(p);
  return inside_[static_cast<std::size_t>(j * columns_ + i)] != 0;
}

bool StaircaseGrid::visible(const ExactPoint& p, const ExactPoint& q) const {
  auto [pi, pj] = cell_of(p);
  auto [qi, qj] = cell_of(q);
  auto usable_cell = [&](long i, long j) {
    return inside_[static_cast<std::size_t>(j * columns_ + i)] != 0;
  };
  if (!usable_cell(pi, pj) || !usable_cell(qi, qj)) return false;
  const long sx = qi >= pi ? 1 : -1;
  const long sy = qj >= pj ? 1 : -1;
  const long w = std::abs(qi - pi) + 1;
  const long h = std::abs(qj - pj) + 1;
  std::vector<char> reach(static_cast<std::size_t>(w * h), 0);
  for (long b = 0; b < h; ++b) {
    for (long a = 0; a < w; ++a) {
      long i = pi + sx * a, j = pj + sy * b;
      if (!usable_cell(i, j)) continue;
      bool r = (a == 0 && b == 0) || (a > 0 && reach[static_cast<std::size_t>(b * w + a - 1)]) ||
               (b > 0 && reach[static_cast<std::size_t>((b - 1) * w + a)]);
      reach[static_cast<std::size_t>(b * w + a)] = r ? 1 : 0;
    }
  }
  return reach.back() != 0;
}

bool grid_staircase_visible(const SimplePolygon& polygon, const ExactPoint& p,
                            const ExactPoint& q, const Rational& pitch) {
  return StaircaseGrid(polygon, pitch).visible(p, q);
}

Scenario build_lowerbound_scenario() {
  static const std::int64_t kPolygon[][2] = {
      {59, 213},     {268, 213},   {268, 48},    {810, 48},    {810, 549},   {1228, 549},
      {1228, 228},   {1491, 228},  {1491, 3},    {2360, 3},    {2360, 253},  {2560, 253},
      {2560, 23},    {3060, 23},   {3060, 296},  {2782, 296},  {2782, 464},  {2050, 464},
      {2050, 711},   {1781, 711},  {1781, 1019}, {2065, 1019}, {2065, 1331}, {2244, 1331},
      {2244, 1053},  {2866, 1053}, {2866, 742},  {3104, 742},  {3104, 1249}, {2831, 1249},
      {2831, 1489},  {3052, 1489}, {3052, 2105}, {2758, 2105}, {2758, 1820}, {2618, 1820},
      {2618, 2313},  {3013, 2313}, {3013, 3119}, {2783, 3119}, {2783, 2554}, {2586, 2554},
      {2586, 2823},  {2016, 2823}, {2016, 2300}, {2356, 2300}, {2356, 2058}, {1825, 2058},
      {1825, 3056},  {781, 3056},  {781, 2855},  {1022, 2855}, {1022, 2537}, {1307, 2537},
      {1307, 2809},  {1580, 2809}, {1580, 2267}, {776, 2267},  {776, 2507},  {499, 2507},
      {499, 2777},   {291, 2777},  {291, 3058},  {-15, 3058},  {-15, 2358},  {533, 2358},
      {533, 2064},   {262, 2064},  {262, 1518},  {773, 1518},  {773, 1751},  {1494, 1751},
      {1494, 1567},  {1251, 1567}, {1251, 788},  {733, 788},   {733, 1046},  {1042, 1046},
      {1042, 1250},  {309, 1250},  {309, 1023},  {557, 1023},  {557, 719},   {260, 719},
      {260, 487},    {59, 487}};
  static const std::int64_t kPoints[][2] = {
      {128, 2432}, {2944, 896}, {128, 384}, {2176, 128}, {2944, 2688}};

  Scenario s;
  s.name = "lowerbound5";
  s.metric = Metric::kL1;
  std::vector<ExactPoint> vertices;
  for (const auto& v : kPolygon) vertices.emplace_back(v[0], v[1]);
  s.polygon = validate_polygon(std::move(vertices));
  std::vector<ExactPoint> positions;
  for (const auto& p : kPoints) positions.emplace_back(p[0], p[1]);
  s.points = PointSet::from_positions(std::move(positions));
  s.expected.shattered = true;
  s.expected.signature_count = 32;
  return s;
}

std::string_view to_string(Generator g) {
  switch (g) {
    case Generator::kRandomStaircase: return "staircase";
    case Generator::kRandomSimple: return "simple";
    case Generator::kMutateFixture: return "mutate";
  }
  return "?";
}

Generator parse_generator(std::string_view text) {
  if (text == "staircase" || text == "RandomStaircase") return Generator::kRandomStaircase;
  if (text == "simple" || text == "RandomSimple") return Generator::kRandomSimple;
  if (text == "mutate" || text == "MutateFixture") return Generator::kMutateFixture;
  throw Error(ErrorCode::kParseError, "unknown generator \"" + std::string(text) + "\"");
}

namespace {

using Rng = std::mt19937_64;

Rng trial_rng(std::uint64_t seed, std::size_t trial, Generator g) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(g)};
  return Rng(seq);
}

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Polyomino on a w x h grid: free cells connected, no holes, no cells
// touching only at a corner.
class Polyomino {
 public:
  Polyomino(long w, long h) : w_(w), h_(h), free_(static_cast<std::size_t>(w * h), 1) {}

  bool at(long x, long y) const {
    return x >= 0 && y >= 0 && x < w_ && y < h_ && free_[static_cast<std::size_t>(y * w_ + x)];
  }
  long size() const { return static_cast<long>(std::count(free_.begin(), free_.end(), 1)); }

  bool try_remove(long x, long y) {
    auto& cell = free_[static_cast<std::size_t>(y * w_ + x)];
    if (!cell) return false;
    cell = 0;
    if (valid()) return true;
    cell = 1;
    return false;
  }

  std::vector<ExactPoint> boundary() const {
    std::map<std::pair<long, long>, std::pair<long, long>> next;
    for (long y = 0; y < h_; ++y) {
      for (long x = 0; x < w_; ++x) {
        if (!at(x, y)) continue;
        if (!at(x, y - 1)) next[{x, y}] = {x + 1, y};
        if (!at(x + 1, y)) next[{x + 1, y}] = {x + 1, y + 1};
        if (!at(x, y + 1)) next[{x + 1, y + 1}] = {x, y + 1};
        if (!at(x - 1, y)) next[{x, y + 1}] = {x, y};
      }
    }
    std::vector<std::pair<long, long>> cycle;
    auto start = next.begin()->first;
    auto cur = start;
    do {
      cycle.push_back(cur);
      cur = next.at(cur);
    } while (cur != start);
    std::vector<ExactPoint> out;
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto a = cycle[(i + n - 1) % n], b = cycle[i], c = cycle[(i + 1) % n];
      long turn = (b.first - a.first) * (c.second - b.second) -
                  (b.second - a.second) * (c.first - b.first);
      if (turn != 0) out.emplace_back(b.first, b.second);
    }
    return out;
  }

 private:
  bool valid() const {
    long n = size();
    if (n < 2) return false;
    // Pinches.
    for (long y = -1; y < h_; ++y) {
      for (long x = -1; x < w_; ++x) {
        bool a = at(x, y), b = at(x + 1, y), c = at(x, y + 1), d = at(x + 1, y + 1);
        if ((a && d && !b && !c) || (b && c && !a && !d)) return false;
      }
    }
    // Connected free cells.
    std::vector<char> seen(free_.size(), 0);
    std::vector<long> stack;
    for (long i = 0; i < w_ * h_; ++i) {
      if (free_[static_cast<std::size_t>(i)]) {
        stack.push_back(i);
        seen[static_cast<std::size_t>(i)] = 1;
        break;
      }
    }
    long reached = 0;
    while (!stack.empty()) {
      long c = stack.back();
      stack.pop_back();
      ++reached;
      long x = c % w_, y = c / w_;
      const long dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        long nx = x + dx[k], ny = y + dy[k];
        if (at(nx, ny) && !seen[static_cast<std::size_t>(ny * w_ + nx)]) {
          seen[static_cast<std::size_t>(ny * w_ + nx)] = 1;
          stack.push_back(ny * w_ + nx);
        }
      }
    }
    if (reached != n) return false;
    // Blocked cells connected to the outside (no holes).
    const long pw = w_ + 2, ph = h_ + 2;
    std::vector<char> out(static_cast<std::size_t>(pw * ph), 0);
    stack.assign(1, 0);
    out[0] = 1;
    long outside = 0;
    while (!stack.empty()) {
      long c = stack.back();
      stack.pop_back();
      ++outside;
      long x = c % pw - 1, y = c / pw - 1;
      const long dx[] = {1, -1, 0, 0}, dy[] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        long nx = x + dx[k], ny = y + dy[k];
        if (nx < -1 || ny < -1 || nx > w_ || ny > h_ || at(nx, ny)) continue;
        long id = (ny + 1) * pw + nx + 1;
        if (!out[static_cast<std::size_t>(id)]) {
          out[static_cast<std::size_t>(id)] = 1;
          stack.push_back(id);
        }
      }
    }
    return outside == pw * ph - n;
  }

  long w_, h_;
  std::vector<char> free_;
};

// Gives every edge of a rectilinear polygon its own offset (distinct
// multiples of 1/denominator), so vertices share a coordinate only along an
// edge. Returns nothing if the result is not in general position.
std::optional<SimplePolygon> perturb_rectilinear(const std::vector<ExactPoint>& v, Rng& rng) {
  const std::size_t n = v.size();
  const long spread = static_cast<long>(n) + 1;
  const Rational unit(1, 4 * spread + 4);
  std::vector<long> offsets(static_cast<std::size_t>(2 * spread + 1));
  std::iota(offsets.begin(), offsets.end(), -spread);
  std::shuffle(offsets.begin(), offsets.end(), rng);
  std::vector<ExactPoint> out = v;
  for (std::size_t i = 0; i < n; ++i) {
    const ExactPoint& a = v[i];
    const ExactPoint& b = v[(i + 1) % n];
    Rational d = unit * offsets[i];
    if (a.x == b.x) {
      out[i].x = a.x + d;
      out[(i + 1) % n].x = a.x + d;
    } else {
      out[i].y = a.y + d;
      out[(i + 1) % n].y = a.y + d;
    }
  }
  if (!compute_general_position(out)) return std::nullopt;
  try {
    return validate_polygon(std::move(out));
  } catch (const Error&) {
    return std::nullopt;
  }
}

SimplePolygon random_staircase(Rng& rng) {
  for (;;) {
    long w = uniform(rng, 5, 9), h = uniform(rng, 5, 9);
    Polyomino grid(w, h);
    long target = w * h * uniform(rng, 45, 70) / 100;
    long attempts = 0;
    while (grid.size() > target && attempts < 40 * w * h) {
      ++attempts;
      grid.try_remove(uniform(rng, 0, w - 1), uniform(rng, 0, h - 1));
    }
    auto vertices = grid.boundary();
    if (vertices.size() < 4) continue;
    for (int tries = 0; tries < 8; ++tries) {
      if (auto poly = perturb_rectilinear(vertices, rng)) return *poly;
    }
  }
}

bool segments_cross(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c,
                    const ExactPoint& d) {
  return !std::holds_alternative<NoIntersection>(segment_intersection({a, b}, {c, d}));
}

SimplePolygon random_simple(Rng& rng) {
  for (;;) {
    const long n = uniform(rng, 8, 24);
    const long range = 4 * n;
    std::vector<long> xs(static_cast<std::size_t>(range)), ys(static_cast<std::size_t>(range));
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(ys.begin(), ys.end(), 0);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    std::vector<ExactPoint> pts;
    for (long i = 0; i < n; ++i) {
      pts.emplace_back(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]);
    }
    if (!compute_general_position(pts)) continue;
    // 2-opt: reverse the chain between two crossing edges until none cross.
    // Distinct x and y values plus no three collinear make every crossing
    // proper, and each reversal shortens the tour, so this terminates.
    bool changed = true;
    const std::size_t m = pts.size();
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < m && !changed; ++i) {
        for (std::size_t j = i + 2; j < m && !changed; ++j) {
          if (i == 0 && j == m - 1) continue;
          if (segments_cross(pts[i], pts[i + 1], pts[j], pts[(j + 1) % m])) {
            std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i + 1),
                         pts.begin() + static_cast<std::ptrdiff_t>(j + 1));
            changed = true;
          }
        }
      }
    }
    try {
      return validate_polygon(std::move(pts));
    } catch (const Error&) {
      continue;
    }
  }
}

// Candidate positions: face representatives first (faces in random order),
// then centroids of other triangles, all strictly inside their face.
std::vector<ExactPoint> place_points(const FaceDecomposition& dec, std::size_t count,
                                     Rng& rng, const std::vector<ExactPoint>& taken = {}) {
  std::vector<std::size_t> order(dec.faces.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<ExactPoint> out;
  std::set<ExactPoint> used(taken.begin(), taken.end());
  auto take = [&](const ExactPoint& p) {
    if (out.size() < count && used.insert(p).second) out.push_back(p);
  };
  for (std::size_t f : order) take(dec.faces[f].representative);
  for (std::size_t f : order) {
    const auto& face = dec.faces[f].boundary.vertices();
    for (const Triangle& t : triangulate(dec.faces[f].boundary)) {
      const ExactPoint& a = face[t[0]];
      const ExactPoint& b = face[t[1]];
      const ExactPoint& c = face[t[2]];
      take({Rational((a.x + b.x + c.x) / 3), Rational((a.y + b.y + c.y) / 3)});
    }
  }
  return out;
}

std::optional<SimplePolygon> mutate_polygon(const SimplePolygon& base, Rng& rng, int moves) {
  std::vector<ExactPoint> v = base.vertices();
  for (int k = 0; k < moves; ++k) {
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v.size()) - 1));
    v[i].x += uniform(rng, -8, 8);
    v[i].y += uniform(rng, -8, 8);
  }
  if (!compute_general_position(v)) return std::nullopt;
  try {
    return validate_polygon(std::move(v));
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct Generated {
  Scenario scenario;
  FaceDecomposition dec;  // L1, without signatures
};

bool off_chords(const FaceDecomposition& dec, const PointSet& points) {
  for (const auto& lp : points.points) {
    for (const auto& cut : dec.cuts) {
      if (on_cut(cut, lp.position)) return false;
    }
  }
  return true;
}

Generated generate(const SearchConfig& config, std::size_t trial) {
  Rng rng = trial_rng(config.seed, trial, config.generator);
  Generated g;
  g.scenario.metric = Metric::kL1;
  g.scenario.name = std::string(to_string(config.generator)) + "-" +
                    std::to_string(config.seed) + "-" + std::to_string(trial);
  if (config.generator == Generator::kMutateFixture) {
    static const Scenario fixture = build_lowerbound_scenario();
    for (;;) {
      int moves = trial == 0 ? 0 : static_cast<int>(uniform(rng, 0, 3));
      auto poly = mutate_polygon(fixture.polygon, rng, moves);
      if (!poly) continue;
      g.dec = decompose(*poly, Metric::kL1);
      std::vector<ExactPoint> positions;
      for (const auto& lp : fixture.points.points) {
        if (positions.size() < config.point_count) positions.push_back(lp.position);
      }
      auto extra = place_points(g.dec, config.point_count - positions.size(), rng, positions);
      positions.insert(positions.end(), extra.begin(), extra.end());
      PointSet pts = PointSet::from_positions(std::move(positions));
      bool ok = pts.size() == config.point_count && off_chords(g.dec, pts);
      if (ok) {
        for (const auto& lp : pts.points) {
          ok = ok && point_in_polygon(*poly, lp.position) == Containment::kInterior;
        }
      }
      if (!ok) continue;
      g.scenario.polygon = *poly;
      g.scenario.points = std::move(pts);
      return g;
    }
  }
  for (;;) {
    SimplePolygon poly = config.generator == Generator::kRandomStaircase
                             ? random_staircase(rng)
                             : random_simple(rng);
    g.dec = decompose(poly, Metric::kL1);
    auto positions = place_points(g.dec, config.point_count, rng);
    if (positions.size() < config.point_count) continue;
    g.scenario.polygon = std::move(poly);
    g.scenario.points = PointSet::from_positions(std::move(positions));
    return g;
  }
}

TrialResult evaluate(const Scenario& s, const FaceDecomposition& dec, std::size_t trial) {
  TrialResult r;
  r.trial = trial;
  r.faces = dec.faces.size();
  const GeodesicContext context(s.polygon);
  const SignatureEvaluator evaluate(context, s.points, Metric::kL1);
  std::set<Signature> achieved;
  for (const Face& f : dec.faces) achieved.insert(evaluate(f.representative));
  const std::size_t n = s.points.size();
  r.signature_count = achieved.size();
  r.shattered = achieved.size() == (std::size_t{1} << n);
  std::size_t top = 0;
  for (Signature sig : achieved) {
    if (static_cast<std::size_t>(std::popcount(sig)) + 2 >= n) ++top;
  }
  r.top_layers = top == 1 + n + n * (n - 1) / 2;
  return r;
}

}  // namespace

Scenario generate_scenario(const SearchConfig& config, std::size_t trial) {
  return generate(config, trial).scenario;
}

TrialResult run_trial(const Scenario& scenario, std::size_t trial) {
  return evaluate(scenario, decompose(scenario.polygon, Metric::kL1), trial);
}

SearchSummary search_no_shatter(const SearchConfig& config) {
  if (config.trials < 1 || config.point_count < 1 || config.point_count > kMaxPoints) {
    throw Error(ErrorCode::kInvalidArgument, "need trials >= 1 and 1 <= points <= 20");
  }
  std::vector<TrialResult> results(config.trials);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, config.threads), config.trials));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t t = w; t < config.trials; t += workers) {
        Generated g = generate(config, t);
        results[t] = evaluate(g.scenario, g.dec, t);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SearchSummary summary;
  summary.config = config;
  summary.trials = config.trials;
  for (const TrialResult& r : results) {
    summary.successes += r.shattered ? 1 : 0;
    summary.top_layer_successes += r.top_layers ? 1 : 0;
    if (r.signature_count > summary.best_signature_count) {
      summary.best_signature_count = r.signature_count;
      summary.best_trial = r.trial;
    }
  }
  summary.best_scenario = generate_scenario(config, summary.best_trial);
  return summary;
}

}  // namespace vcvis
