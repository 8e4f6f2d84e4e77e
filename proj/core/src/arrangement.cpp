#include "geomcut/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "geomcut/errors.hpp"

namespace geomcut {

namespace {

// Full planarization: every segment is split at each point where any other
// segment meets it, then pieces are deduplicated. Output pieces intersect
// pairwise in at most a shared endpoint.
std::vector<Segment> planarize(const std::vector<Segment>& segs) {
  struct BB {
    Rational xlo, xhi, ylo, yhi;
  };
  std::vector<BB> boxes;
  boxes.reserve(segs.size());
  for (const auto& s : segs)
    boxes.push_back({std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x),
                     std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)});
  auto disjoint = [](const BB& a, const BB& b) {
    return a.xhi < b.xlo || b.xhi < a.xlo || a.yhi < b.ylo || b.yhi < a.ylo;
  };

  std::vector<Segment> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    if (s.a == s.b) throw InputError("degenerate segment");
    Point d = s.b - s.a;
    Rational dd = dot(d, d);
    std::vector<Rational> ts = {Rational(0), Rational(1)};
    for (std::size_t j = 0; j < segs.size(); ++j) {
      if (j == i || disjoint(boxes[i], boxes[j])) continue;
      Intersection r = segment_intersection(s, segs[j]);
      if (r.kind == IntersectKind::AtPoint) {
        ts.push_back(dot(r.point - s.a, d) / dd);
      } else if (r.kind == IntersectKind::Overlap) {
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

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// CCW order starting at the positive x axis. dy > 0 (or dy == 0, dx > 0)
// forms the first half-turn.
int half_turn(const Point& d) {
  if (d.y.sign() > 0) return 0;
  if (d.y.sign() < 0) return 1;
  return d.x.sign() > 0 ? 0 : 1;
}

bool angular_less(const Point& da, const Point& db) {
  int ha = half_turn(da), hb = half_turn(db);
  if (ha != hb) return ha < hb;
  return cross(da, db).sign() > 0;
}

// Parity of horizontal +x ray crossings from p against the closed directed
// walk through `pts`. Exact; p must not lie on the walk.
bool crossing_parity(const Point& p, const std::vector<Point>& pts) {
  int crossings = 0;
  std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % n];
    if (a.y <= p.y && p.y < b.y) {
      if (orientation(a, b, p) > 0) ++crossings;
    } else if (b.y <= p.y && p.y < a.y) {
      if (orientation(a, b, p) < 0) ++crossings;
    }
  }
  return crossings % 2 == 1;
}

}  // namespace

int Arrangement::vertex_id(const Point& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || !(*it == p)) return -1;
  return static_cast<int>(it - vertices.begin());
}

Arrangement build_arrangement(const std::vector<Segment>& segs) {
  if (segs.empty()) throw DegenerateInput("cannot build an arrangement from no segments");
  Arrangement arr;

  std::vector<Segment> pieces = planarize(segs);

  for (const auto& s : pieces) {
    arr.vertices.push_back(s.a);
    arr.vertices.push_back(s.b);
  }
  std::sort(arr.vertices.begin(), arr.vertices.end());
  arr.vertices.erase(std::unique(arr.vertices.begin(), arr.vertices.end()),
                     arr.vertices.end());

  for (const auto& s : pieces) {
    int u = arr.vertex_id(s.a);
    int v = arr.vertex_id(s.b);
    // canonical pieces have a < b, and vertex ids follow lexicographic order
    arr.edges.push_back({u, v, euclid_length(s)});
  }

  const int V = static_cast<int>(arr.vertices.size());
  const int E = static_cast<int>(arr.edges.size());
  arr.half_edges.resize(2 * E);
  std::vector<std::vector<int>> out(V);
  for (int e = 0; e < E; ++e) {
    arr.half_edges[2 * e] = {arr.edges[e].u, -1, -1, -1};
    arr.half_edges[2 * e + 1] = {arr.edges[e].v, -1, -1, -1};
    out[arr.edges[e].u].push_back(2 * e);
    out[arr.edges[e].v].push_back(2 * e + 1);
  }

  auto dir_of = [&](int h) {
    return arr.vertices[arr.dest(h)] - arr.vertices[arr.half_edges[h].origin];
  };
  std::vector<int> pos(2 * E);
  for (int v = 0; v < V; ++v) {
    std::sort(out[v].begin(), out[v].end(),
              [&](int a, int b) { return angular_less(dir_of(a), dir_of(b)); });
    for (std::size_t i = 0; i < out[v].size(); ++i) pos[out[v][i]] = static_cast<int>(i);
  }

  // next(h): the clockwise neighbor of twin(h) around dest(h) keeps the face
  // on the left of every half-edge.
  for (int h = 0; h < 2 * E; ++h) {
    const auto& ring = out[arr.dest(h)];
    int p = pos[h ^ 1];
    int nh = ring[(p + ring.size() - 1) % ring.size()];
    arr.half_edges[h].next = nh;
    arr.half_edges[nh].prev = h;
  }

  std::vector<int> cycle_of(2 * E, -1);
  std::vector<std::vector<int>> cycles;
  for (int h = 0; h < 2 * E; ++h) {
    if (cycle_of[h] != -1) continue;
    int id = static_cast<int>(cycles.size());
    std::vector<int> cyc;
    int cur = h;
    do {
      cycle_of[cur] = id;
      cyc.push_back(cur);
      cur = arr.half_edges[cur].next;
    } while (cur != h);
    cycles.push_back(std::move(cyc));
  }

  auto cycle_points = [&](const std::vector<int>& cyc) {
    std::vector<Point> pts;
    pts.reserve(cyc.size());
    for (int h : cyc) pts.push_back(arr.vertices[arr.half_edges[h].origin]);
    return pts;
  };
  std::vector<Rational> area2(cycles.size(), Rational(0));
  for (std::size_t c = 0; c < cycles.size(); ++c)
    area2[c] = twice_signed_area(cycle_points(cycles[c]));

  arr.faces.push_back({0, false, std::nullopt, Point{}, {}, {}});
  arr.outer_face = 0;
  std::vector<int> face_of_cycle(cycles.size(), -1);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (area2[c].sign() > 0) {
      int f = static_cast<int>(arr.faces.size());
      face_of_cycle[c] = f;
      arr.faces.push_back({f, true, std::nullopt, Point{}, cycles[c], {}});
    }
  }

  // A cycle with non-positive area bounds its face from the inside. Its
  // containing face is the innermost positive cycle enclosing it; testing the
  // midpoint of one of its edges is safe because no other cycle runs through
  // the interior of that edge.
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (area2[c].sign() > 0) continue;
    int h0 = cycles[c][0];
    Segment s0{arr.vertices[arr.half_edges[h0].origin], arr.vertices[arr.dest(h0)]};
    Point m = midpoint(s0.a, s0.b);
    int best = -1;
    for (std::size_t p = 0; p < cycles.size(); ++p) {
      if (area2[p].sign() <= 0) continue;
      if (cycle_of[h0] == static_cast<int>(p) || cycle_of[h0 ^ 1] == static_cast<int>(p))
        continue;
      if (!crossing_parity(m, cycle_points(cycles[p]))) continue;
      if (best == -1 || area2[p] < area2[best]) best = static_cast<int>(p);
    }
    int f = best == -1 ? 0 : face_of_cycle[best];
    arr.faces[f].holes.push_back(cycles[c]);
    face_of_cycle[c] = f;
  }
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int h : cycles[c]) arr.half_edges[h].face = face_of_cycle[c];

  Dsu dsu(V);
  for (const auto& e : arr.edges) dsu.unite(e.u, e.v);
  std::vector<int> roots;
  for (int v = 0; v < V; ++v) roots.push_back(dsu.find(v));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  arr.components = static_cast<int>(roots.size());

  const int F = static_cast<int>(arr.faces.size());
  if (V - E + F != 1 + arr.components)
    throw InternalError("Euler relation violated: V=" + std::to_string(V) +
                        " E=" + std::to_string(E) + " F=" + std::to_string(F) +
                        " C=" + std::to_string(arr.components));

  // Representative points. For a bounded face: midpoint of one boundary edge
  // pushed halfway to the first boundary hit along the inward normal. The
  // first hit lies on this face's own boundary, so only it is searched.
  auto boundary_segments = [&](const Arrangement::Face& f) {
    std::vector<int> hs = f.outer;
    for (const auto& hole : f.holes) hs.insert(hs.end(), hole.begin(), hole.end());
    std::vector<int> es;
    es.reserve(hs.size());
    for (int h : hs) es.push_back(h / 2);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    std::vector<Segment> segs2;
    segs2.reserve(es.size());
    for (int e : es) segs2.push_back(arr.edge_segment(e));
    return segs2;
  };
  auto in_face = [&](const Point& p, const Arrangement::Face& f) {
    if (f.bounded && !crossing_parity(p, cycle_points(f.outer))) return false;
    for (const auto& hole : f.holes)
      if (crossing_parity(p, cycle_points(hole))) return false;
    return true;
  };

  for (auto& f : arr.faces) {
    if (!f.bounded) {
      Point lo = arr.vertices[0];
      for (const auto& p : arr.vertices) {
        if (p.x < lo.x) lo.x = p.x;
        if (p.y < lo.y) lo.y = p.y;
      }
      f.representative = {lo.x - Rational(1), lo.y - Rational(1)};
    } else {
      int h = *std::min_element(f.outer.begin(), f.outer.end());
      Point a = arr.vertices[arr.half_edges[h].origin];
      Point b = arr.vertices[arr.dest(h)];
      Point m = midpoint(a, b);
      Point d = b - a;
      Point n{-d.y, d.x};  // face lies left of h
      auto t = ray_first_hit(m, n, boundary_segments(f));
      if (!t) throw InternalError("inward ray missed the face boundary");
      f.representative = m + (*t / Rational(2)) * n;
    }
    if (!in_face(f.representative, f))
      throw InternalError("representative point escaped face " + std::to_string(f.id));
  }

  return arr;
}

void locate_object_faces(Arrangement& arr, const Instance& inst) {
  for (std::size_t oi = 0; oi < inst.objects.size(); ++oi) {
    const Polygon& poly = inst.objects[oi];
    int v0 = arr.vertex_id(poly.vertices[0]);
    if (v0 < 0) throw ObjectFaceNotFound("object corner missing from arrangement");
    Point d = poly.vertices[1] - poly.vertices[0];
    // The interior face sits left of the boundary edge leaving the first
    // vertex; that edge survives in the arrangement, possibly shortened.
    int found = -1;
    for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) {
      if (arr.half_edges[h].origin != v0) continue;
      Point hd = arr.vertices[arr.dest(h)] - arr.vertices[v0];
      if (cross(hd, d).sign() == 0 && dot(hd, d).sign() > 0) {
        found = arr.half_edges[h].face;
        break;
      }
    }
    if (found < 0) throw ObjectFaceNotFound("no boundary half-edge at object corner");
    Arrangement::Face& f = arr.faces[found];
    if (point_in_polygon(f.representative, poly) != PointLocation::Interior)
      throw ObjectFaceNotFound("located face fails the interior check");
    if (f.object && *f.object != static_cast<int>(oi))
      throw InternalError("two objects share one face");
    f.object = static_cast<int>(oi);
  }
}

double face_boundary_length(const Arrangement& arr, int f) {
  double total = 0.0;
  for (std::size_t e = 0; e < arr.edges.size(); ++e) {
    auto [f1, f2] = arr.edge_faces(static_cast<int>(e));
    if (f1 == f) total += arr.edges[e].length;
    if (f2 == f) total += arr.edges[e].length;
  }
  return total;
}

std::string dump(const Arrangement& arr) {
  std::ostringstream os;
  os << "V " << arr.vertices.size() << "\n";
  for (std::size_t i = 0; i < arr.vertices.size(); ++i)
    os << i << " " << to_string(arr.vertices[i]) << "\n";
  os << "E " << arr.edges.size() << "\n";
  for (std::size_t e = 0; e < arr.edges.size(); ++e)
    os << e << " " << arr.edges[e].u << " " << arr.edges[e].v << "\n";
  os << "F " << arr.faces.size() << " C " << arr.components << "\n";
  for (const auto& f : arr.faces) {
    os << f.id << " " << (f.bounded ? "bounded" : "unbounded") << " object=";
    if (f.object)
      os << *f.object;
    else
      os << "-";
    os << " rep=" << to_string(f.representative) << " outer=" << f.outer.size()
       << " holes=" << f.holes.size() << "\n";
  }
  return os.str();
}

}  // namespace geomcut
