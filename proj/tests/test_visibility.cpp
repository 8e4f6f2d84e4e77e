#include <doctest.h>

#include <geomcut/geometry.hpp>
#include <geomcut/visibility.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace geomcut;

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

Segment seg(Point a, Point b) { return Segment{std::move(a), std::move(b)}; }

Polygon square(long x0, long y0, long side, int color = 0) {
  Polygon p;
  p.vertices = {pt(x0, y0), pt(x0 + side, y0), pt(x0 + side, y0 + side),
                pt(x0, y0 + side)};
  p.color = color;
  return p;
}

Instance two_squares() {
  Instance inst;
  inst.num_colors = 2;
  inst.objects = {square(0, 0, 1, 0), square(3, 0, 1, 1)};
  return inst;
}

std::set<Segment> as_set(const std::vector<Segment>& v) {
  std::set<Segment> s;
  for (const Segment& x : v) s.insert(canonical(x));
  return s;
}

}  // namespace

TEST_CASE("corners of a triangle") {
  Instance inst;
  inst.num_colors = 1;
  inst.objects = {Polygon{{pt(0, 0), pt(3, 0), pt(0, 4)}, 0}};
  CHECK(corners(inst).size() == 3);
}

TEST_CASE("corners of two squares") {
  CHECK(corners(two_squares()).size() == 8);
}

TEST_CASE("coincident corners collapse but keep their provenance") {
  Instance inst;
  inst.num_colors = 1;
  inst.objects = {square(0, 0, 1, 0), square(1, 1, 1, 0)};
  const auto cs = corners(inst);
  CHECK(cs.size() == 7);

  const auto set = free_segments(inst);
  const auto it = set.corner_index.find(pt(1, 1));
  REQUIRE(it != set.corner_index.end());
  CHECK(it->second.size() == 2);  // one vertex of each square sits here
}

TEST_CASE("is_free accepts edges and rejects interior chords") {
  const Instance inst = two_squares();
  CHECK(is_free(seg(pt(0, 0), pt(1, 0)), inst));      // object edge
  CHECK_FALSE(is_free(seg(pt(0, 0), pt(1, 1)), inst));  // diagonal of square 0
  CHECK(is_free(seg(pt(1, 0), pt(3, 0)), inst));      // chord between squares
  CHECK(is_free(seg(pt(0, 0), pt(4, 0)), inst));      // runs along two edges
  CHECK_FALSE(is_free(seg(pt(0, 0), pt(4, 1)), inst));  // cuts both interiors
}

TEST_CASE("free segments of a lone triangle are its edges") {
  Instance inst;
  inst.num_colors = 1;
  inst.objects = {Polygon{{pt(0, 0), pt(3, 0), pt(0, 4)}, 0}};
  const auto set = free_segments(inst);
  CHECK(as_set(set.segments) ==
        as_set({seg(pt(0, 0), pt(3, 0)), seg(pt(3, 0), pt(0, 4)),
                seg(pt(0, 4), pt(0, 0))}));
}

TEST_CASE("free segments of a lone square exclude the diagonals") {
  Instance inst;
  inst.num_colors = 1;
  inst.objects = {square(0, 0, 1)};
  const auto set = free_segments(inst);
  CHECK(set.segments.size() == 4);
  for (const Segment& s : set.segments) {
    CHECK(s.a.x + s.a.y != s.b.x + s.b.y);  // no diagonal slipped in
  }
}

TEST_CASE("free segments of two squares") {
  const auto set = free_segments(two_squares());

  // Along y=0 and y=1 the chords and edges overlap; after canonicalization
  // each line contributes pieces [0,1], [1,3], [3,4]. The two crossing
  // diagonals (1,0)-(3,1) and (1,1)-(3,0) stay whole.
  const std::set<Segment> expected = as_set({
      seg(pt(0, 0), pt(1, 0)), seg(pt(1, 0), pt(3, 0)), seg(pt(3, 0), pt(4, 0)),
      seg(pt(0, 1), pt(1, 1)), seg(pt(1, 1), pt(3, 1)), seg(pt(3, 1), pt(4, 1)),
      seg(pt(0, 0), pt(0, 1)), seg(pt(1, 0), pt(1, 1)),
      seg(pt(3, 0), pt(3, 1)), seg(pt(4, 0), pt(4, 1)),
      seg(pt(1, 0), pt(3, 1)), seg(pt(1, 1), pt(3, 0)),
  });
  CHECK(as_set(set.segments) == expected);
  CHECK(set.segments.size() == 12);
}

TEST_CASE("free segment invariants") {
  Instance inst = two_squares();
  const auto set = free_segments(inst);

  // Every output segment is itself free.
  for (const Segment& s : set.segments) CHECK(is_free(s, inst));

  // No two output segments overlap along a line (crossings are allowed).
  for (std::size_t i = 0; i < set.segments.size(); ++i)
    for (std::size_t j = i + 1; j < set.segments.size(); ++j) {
      const auto r = segment_intersection(set.segments[i], set.segments[j]);
      CHECK(r.kind != IntersectKind::Overlap);
    }

  // Every object edge is covered by output pieces: each edge's total length
  // equals the sum of pieces lying on it.
  for (const Polygon& obj : inst.objects) {
    const auto n = obj.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Segment edge{obj.vertices[i], obj.vertices[(i + 1) % n]};
      double covered = 0.0;
      for (const Segment& s : set.segments) {
        const auto r = segment_intersection(edge, s);
        if (r.kind == IntersectKind::Overlap) covered += euclid_length(r.overlap);
      }
      CHECK(covered == doctest::Approx(euclid_length(edge)).epsilon(1e-12));
    }
  }
}

TEST_CASE("free segments are stable under object reordering") {
  Instance a = two_squares();
  Instance b = a;
  std::reverse(b.objects.begin(), b.objects.end());
  CHECK(as_set(free_segments(a).segments) == as_set(free_segments(b).segments));
}

TEST_CASE("canonicalize_segments splits only overlaps") {
  // Two crossing diagonals must survive untouched.
  const auto crossing =
      canonicalize_segments({seg(pt(0, 0), pt(2, 2)), seg(pt(0, 2), pt(2, 0))});
  CHECK(crossing.size() == 2);

  const auto split =
      canonicalize_segments({seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(3, 0))});
  CHECK(as_set(split) == as_set({seg(pt(0, 0), pt(1, 0)),
                                 seg(pt(1, 0), pt(2, 0)),
                                 seg(pt(2, 0), pt(3, 0))}));

  // Duplicates collapse.
  const auto dedup =
      canonicalize_segments({seg(pt(0, 0), pt(1, 0)), seg(pt(1, 0), pt(0, 0))});
  CHECK(dedup.size() == 1);
}

TEST_CASE("shared boundary edges appear once") {
  Instance inst;
  inst.num_colors = 2;
  inst.objects = {square(0, 0, 1, 0), square(1, 0, 1, 1)};
  const auto set = free_segments(inst);
  const Segment shared = canonical(seg(pt(1, 0), pt(1, 1)));
  int count = 0;
  for (const Segment& s : set.segments)
    if (canonical(s) == shared) ++count;
  CHECK(count == 1);
}
