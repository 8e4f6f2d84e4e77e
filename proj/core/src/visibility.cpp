#include "geomcut/visibility.hpp"

#include <algorithm>

#include "geomcut/errors.hpp"

namespace geomcut {

std::vector<Point> corners(const Instance& inst) {
  std::vector<Point> pts;
  for (const auto& obj : inst.objects)
    pts.insert(pts.end(), obj.vertices.begin(), obj.vertices.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

namespace {

struct SegBBox {
  Rational xlo, xhi, ylo, yhi;
  explicit SegBBox(const Segment& s)
      : xlo(std::min(s.a.x, s.b.x)),
        xhi(std::max(s.a.x, s.b.x)),
        ylo(std::min(s.a.y, s.b.y)),
        yhi(std::max(s.a.y, s.b.y)) {}
  void grow(const Point& p) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  bool disjoint(const SegBBox& o) const {
    return xhi < o.xlo || o.xhi < xlo || yhi < o.ylo || o.yhi < ylo;
  }
};

SegBBox polygon_bbox(const Polygon& poly) {
  SegBBox b({poly.vertices[0], poly.vertices[0]});
  for (const auto& p : poly.vertices) b.grow(p);
  return b;
}

// Splits `seg` at every intersection with the polygon's edges and checks each
// piece's midpoint. A piece inside the polygon makes the segment unfree.
bool clear_of(const Segment& seg, const Polygon& poly) {
  Point d = seg.b - seg.a;
  Rational dd = dot(d, d);
  std::vector<Rational> ts = {Rational(0), Rational(1)};
  std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    Segment e{poly.vertices[i], poly.vertices[(i + 1) % n]};
    Intersection r = segment_intersection(seg, e);
    if (r.kind == IntersectKind::AtPoint) {
      ts.push_back(dot(r.point - seg.a, d) / dd);
    } else if (r.kind == IntersectKind::Overlap) {
      ts.push_back(dot(r.overlap.a - seg.a, d) / dd);
      ts.push_back(dot(r.overlap.b - seg.a, d) / dd);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  Rational half(1, 2);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Point mid = seg.a + (half * (ts[i] + ts[i + 1])) * d;
    if (point_in_polygon(mid, poly) == PointLocation::Interior) return false;
  }
  return true;
}

}  // namespace

bool is_free(const Segment& s, const Instance& inst) {
  if (s.a == s.b) throw InputError("degenerate segment");
  SegBBox sb(s);
  for (const auto& obj : inst.objects) {
    if (sb.disjoint(polygon_bbox(obj))) continue;
    if (!clear_of(s, obj)) return false;
  }
  return true;
}

std::vector<Segment> canonicalize_segments(std::vector<Segment> segs) {
  std::vector<Segment> out;
  std::vector<SegBBox> boxes;
  boxes.reserve(segs.size());
  for (const auto& s : segs) boxes.emplace_back(s);

  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    Point d = s.b - s.a;
    Rational dd = dot(d, d);
    std::vector<Rational> ts = {Rational(0), Rational(1)};
    for (std::size_t j = 0; j < segs.size(); ++j) {
      if (j == i || boxes[i].disjoint(boxes[j])) continue;
      Intersection r = segment_intersection(s, segs[j]);
      if (r.kind == IntersectKind::Overlap) {
        ts.push_back(dot(r.overlap.a - s.a, d) / dd);
        ts.push_back(dot(r.overlap.b - s.a, d) / dd);
      }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::size_t m = 0; m + 1 < ts.size(); ++m)
      out.push_back(canonical({s.a + ts[m] * d, s.a + ts[m + 1] * d}));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SegmentSet free_segments(const Instance& inst) {
  SegmentSet set;
  for (std::size_t oi = 0; oi < inst.objects.size(); ++oi) {
    const auto& vs = inst.objects[oi].vertices;
    for (std::size_t vi = 0; vi < vs.size(); ++vi)
      set.corner_index[vs[vi]].push_back({static_cast<int>(oi), static_cast<int>(vi)});
  }
  std::vector<Point> cs = corners(inst);
  std::vector<Segment> kept;
  // Every object edge is itself a corner pair, so the pair sweep covers them.
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      Segment cand{cs[i], cs[j]};
      if (is_free(cand, inst)) kept.push_back(canonical(cand));
    }
  set.segments = canonicalize_segments(std::move(kept));
  return set;
}

}  // namespace geomcut
