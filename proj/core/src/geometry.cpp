#include "geomcut/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "geomcut/errors.hpp"

namespace geomcut {

Segment canonical(Segment s) {
  if (s.b < s.a) std::swap(s.a, s.b);
  return s;
}

int orientation(const Point& p, const Point& q, const Point& r) {
  return cross(p, q, r).sign();
}

namespace {

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != 0) return false;
  const auto& [lo, hi] = std::minmax(s.a.x, s.b.x);
  if (p.x < lo || hi < p.x) return false;
  const auto& [ylo, yhi] = std::minmax(s.a.y, s.b.y);
  return !(p.y < ylo || yhi < p.y);
}

struct BBox {
  Rational xlo, xhi, ylo, yhi;
  static BBox of(const std::vector<Point>& pts) {
    BBox b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (const auto& p : pts) {
      if (p.x < b.xlo) b.xlo = p.x;
      if (b.xhi < p.x) b.xhi = p.x;
      if (p.y < b.ylo) b.ylo = p.y;
      if (b.yhi < p.y) b.yhi = p.y;
    }
    return b;
  }
  bool disjoint(const BBox& o) const {
    return xhi < o.xlo || o.xhi < xlo || yhi < o.ylo || o.yhi < ylo;
  }
};

}  // namespace

Intersection segment_intersection(const Segment& s, const Segment& t) {
  if (s.a == s.b || t.a == t.b) throw InputError("degenerate segment in intersection");
  Point d1 = s.b - s.a;
  Point d2 = t.b - t.a;
  Rational denom = cross(d1, d2);
  Point w = t.a - s.a;

  if (denom.sign() != 0) {
    Rational tt = cross(w, d2) / denom;
    Rational uu = cross(w, d1) / denom;
    Rational zero(0), one(1);
    if (tt < zero || one < tt || uu < zero || one < uu) return {};
    Intersection r;
    r.kind = IntersectKind::AtPoint;
    r.point = s.a + tt * d1;
    return r;
  }

  if (cross(w, d1).sign() != 0) return {};  // parallel, distinct lines

  // collinear: project t's endpoints onto s's parameterization
  Rational dd = dot(d1, d1);
  Rational ta = dot(t.a - s.a, d1) / dd;
  Rational tb = dot(t.b - s.a, d1) / dd;
  if (tb < ta) std::swap(ta, tb);
  Rational lo = ta < Rational(0) ? Rational(0) : ta;
  Rational hi = tb < Rational(1) ? tb : Rational(1);
  if (hi < lo) return {};
  Point plo = s.a + lo * d1;
  Point phi = s.a + hi * d1;
  if (lo == hi) {
    Intersection r;
    r.kind = IntersectKind::AtPoint;
    r.point = plo;
    return r;
  }
  Intersection r;
  r.kind = IntersectKind::Overlap;
  r.overlap = canonical({plo, phi});
  return r;
}

PointLocation point_in_polygon(const Point& p, const Polygon& poly) {
  const auto& v = poly.vertices;
  std::size_t n = v.size();
  if (n < 3) throw InputError("polygon with fewer than 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (a == b) throw InputError("polygon with repeated consecutive vertex");
    if (on_segment(p, {a, b})) return PointLocation::Boundary;
  }
  int crossings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    if (a.y <= p.y && p.y < b.y) {
      if (orientation(a, b, p) > 0) ++crossings;
    } else if (b.y <= p.y && p.y < a.y) {
      if (orientation(a, b, p) < 0) ++crossings;
    }
  }
  return (crossings % 2 == 1) ? PointLocation::Interior : PointLocation::Exterior;
}

Rational twice_signed_area(const std::vector<Point>& ring) {
  Rational acc(0);
  std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    acc += a.x * b.y - b.x * a.y;
  }
  return acc;
}

std::optional<Rational> ray_first_hit(const Point& m, const Point& n,
                                      const std::vector<Segment>& edges) {
  std::optional<Rational> best;
  auto consider = [&](const Rational& t) {
    if (t.sign() <= 0) return;
    if (!best || t < *best) best = t;
  };
  for (const auto& e : edges) {
    Point d = e.b - e.a;
    Point pm = e.a - m;
    Rational denom = cross(n, d);
    if (denom.sign() != 0) {
      Rational t = cross(pm, d) / denom;
      Rational s = cross(pm, n) / denom;
      if (s.sign() >= 0 && s <= Rational(1)) consider(t);
    } else if (cross(pm, n).sign() == 0) {
      // edge lies on the ray's line: endpoints hit directly
      Rational nn = dot(n, n);
      consider(dot(e.a - m, n) / nn);
      consider(dot(e.b - m, n) / nn);
    }
  }
  return best;
}

namespace {

std::vector<Segment> polygon_edges(const Polygon& poly) {
  std::vector<Segment> out;
  std::size_t n = poly.vertices.size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({poly.vertices[i], poly.vertices[(i + 1) % n]});
  return out;
}

}  // namespace

Point interior_point(const Polygon& poly) {
  Polygon p = poly;
  Rational a2 = twice_signed_area(p.vertices);
  if (a2.sign() == 0) throw InputError("interior_point on zero-area polygon");
  if (a2.sign() < 0) std::reverse(p.vertices.begin(), p.vertices.end());

  Point m = midpoint(p.vertices[0], p.vertices[1]);
  Point d = p.vertices[1] - p.vertices[0];
  Point n{-d.y, d.x};  // left normal: interior side of a CCW ring
  auto hit = ray_first_hit(m, n, polygon_edges(p));
  if (!hit) throw InternalError("interior ray found no boundary");
  return m + (*hit / Rational(2)) * n;
}

namespace {

bool proper_crossing(const Segment& s, const Segment& t) {
  int o1 = orientation(t.a, t.b, s.a);
  int o2 = orientation(t.a, t.b, s.b);
  int o3 = orientation(s.a, s.b, t.a);
  int o4 = orientation(s.a, s.b, t.b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

// Midpoints of the pieces of `seg` after splitting at every intersection with `cutters`.
std::vector<Point> piece_midpoints(const Segment& seg, const std::vector<Segment>& cutters) {
  Point d = seg.b - seg.a;
  Rational dd = dot(d, d);
  std::vector<Rational> ts = {Rational(0), Rational(1)};
  for (const auto& c : cutters) {
    Intersection r = segment_intersection(seg, c);
    if (r.kind == IntersectKind::AtPoint) {
      ts.push_back(dot(r.point - seg.a, d) / dd);
    } else if (r.kind == IntersectKind::Overlap) {
      ts.push_back(dot(r.overlap.a - seg.a, d) / dd);
      ts.push_back(dot(r.overlap.b - seg.a, d) / dd);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Point> mids;
  Rational half(1, 2);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Rational tm = half * (ts[i] + ts[i + 1]);
    mids.push_back(seg.a + tm * d);
  }
  return mids;
}

}  // namespace

bool interiors_overlap(const Polygon& p, const Polygon& q) {
  if (BBox::of(p.vertices).disjoint(BBox::of(q.vertices))) return false;
  auto pe = polygon_edges(p);
  auto qe = polygon_edges(q);
  for (const auto& a : pe)
    for (const auto& b : qe)
      if (proper_crossing(a, b)) return true;
  for (const auto& a : pe)
    for (const Point& m : piece_midpoints(a, qe))
      if (point_in_polygon(m, q) == PointLocation::Interior) return true;
  for (const auto& b : qe)
    for (const Point& m : piece_midpoints(b, pe))
      if (point_in_polygon(m, p) == PointLocation::Interior) return true;
  if (point_in_polygon(interior_point(p), q) == PointLocation::Interior) return true;
  if (point_in_polygon(interior_point(q), p) == PointLocation::Interior) return true;
  return false;
}

double euclid_length(const Segment& s) {
  double dx = (s.b.x - s.a.x).to_double();
  double dy = (s.b.y - s.a.y).to_double();
  return std::hypot(dx, dy);
}

namespace {

bool polygon_is_simple(const Polygon& poly, std::string& why) {
  const auto& v = poly.vertices;
  std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Segment ei{v[i], v[(i + 1) % n]};
      Segment ej{v[j], v[(j + 1) % n]};
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      Intersection r = segment_intersection(ei, ej);
      if (adjacent) {
        if (r.kind == IntersectKind::Overlap) {
          why = "adjacent edges overlap collinearly";
          return false;
        }
        Point shared = (j == i + 1) ? v[j] : v[0];
        if (r.kind != IntersectKind::AtPoint || !(r.point == shared)) {
          why = "adjacent edges meet outside their shared vertex";
          return false;
        }
      } else if (r.kind != IntersectKind::Empty) {
        why = "non-adjacent edges intersect";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_instance(Instance& inst) {
  ValidationReport rep;
  auto err = [&rep](ValidationCode c, int a, int b, std::string msg) {
    rep.errors.push_back({c, a, b, std::move(msg)});
  };

  if (inst.num_colors < 1)
    err(ValidationCode::BadColorIndex, -1, -1, "num_colors must be at least 1");

  std::vector<bool> usable(inst.objects.size(), false);
  for (std::size_t i = 0; i < inst.objects.size(); ++i) {
    Polygon& poly = inst.objects[i];
    const int oi = static_cast<int>(i);
    if (poly.vertices.size() < 3) {
      err(ValidationCode::TooFewVertices, oi, -1,
          "object " + std::to_string(i) + " has fewer than 3 vertices");
      continue;
    }
    bool dup = false;
    for (std::size_t j = 0; j < poly.vertices.size(); ++j)
      if (poly.vertices[j] == poly.vertices[(j + 1) % poly.vertices.size()]) dup = true;
    if (dup) {
      err(ValidationCode::NonSimplePolygon, oi, -1,
          "object " + std::to_string(i) + " repeats a consecutive vertex");
      continue;
    }
    std::string why;
    if (!polygon_is_simple(poly, why)) {
      err(ValidationCode::NonSimplePolygon, oi, -1,
          "object " + std::to_string(i) + " is not simple: " + why);
      continue;
    }
    Rational a2 = twice_signed_area(poly.vertices);
    if (a2.sign() == 0) {
      err(ValidationCode::ZeroAreaPolygon, oi, -1,
          "object " + std::to_string(i) + " has zero area");
      continue;
    }
    if (a2.sign() < 0) {
      std::reverse(poly.vertices.begin(), poly.vertices.end());
      rep.warnings.push_back({ValidationCode::ReversedOrientation, oi, -1,
                              "object " + std::to_string(i) + " was clockwise; reversed"});
    }
    if (poly.color < 0 || poly.color >= inst.num_colors) {
      err(ValidationCode::BadColorIndex, oi, -1,
          "object " + std::to_string(i) + " has color " + std::to_string(poly.color) +
              " outside [0, " + std::to_string(inst.num_colors) + ")");
      continue;
    }
    usable[i] = true;
  }

  for (std::size_t i = 0; i < inst.objects.size(); ++i) {
    if (!usable[i]) continue;
    for (std::size_t j = i + 1; j < inst.objects.size(); ++j) {
      if (!usable[j]) continue;
      if (interiors_overlap(inst.objects[i], inst.objects[j]))
        err(ValidationCode::OverlappingInteriors, static_cast<int>(i), static_cast<int>(j),
            "objects " + std::to_string(i) + " and " + std::to_string(j) +
                " have overlapping interiors");
    }
  }
  return rep;
}

}  // namespace geomcut
