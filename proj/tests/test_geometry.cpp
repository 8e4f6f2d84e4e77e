#include <doctest.h>

#include <geomcut/errors.hpp>
#include <geomcut/geometry.hpp>

#include <cmath>
#include <vector>

using namespace geomcut;

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

Point ptd(const char* x, const char* y) {
  return Point{Rational::from_string(x), Rational::from_string(y)};
}

Segment seg(Point a, Point b) { return Segment{std::move(a), std::move(b)}; }

Polygon square(long x0, long y0, long side, int color = 0) {
  Polygon p;
  p.vertices = {pt(x0, y0), pt(x0 + side, y0), pt(x0 + side, y0 + side),
                pt(x0, y0 + side)};
  p.color = color;
  return p;
}

}  // namespace

TEST_CASE("orientation matches the sign of the turn") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(1, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(1, -1)) == -1);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
  // Exact even where doubles would lose the answer.
  CHECK(orientation(ptd("0.1", "0.1"), ptd("0.2", "0.2"), ptd("0.3", "0.3")) == 0);
}

TEST_CASE("orientation is antisymmetric and translation invariant") {
  const std::vector<Point> pts = {pt(0, 0), pt(3, 1), pt(-2, 5), pt(7, -4),
                                  ptd("1/3", "2/7"), ptd("-5/2", "0.25")};
  const Point shift = ptd("13/11", "-8/3");
  for (const Point& a : pts)
    for (const Point& b : pts)
      for (const Point& c : pts) {
        CHECK(orientation(a, b, c) == -orientation(a, c, b));
        CHECK(orientation(a, b, c) ==
              orientation(a + shift, b + shift, c + shift));
      }
}

TEST_CASE("segment intersection: proper crossing") {
  const auto r =
      segment_intersection(seg(pt(0, 0), pt(2, 2)), seg(pt(0, 2), pt(2, 0)));
  REQUIRE(r.kind == IntersectKind::AtPoint);
  CHECK(r.point == pt(1, 1));
}

TEST_CASE("segment intersection: parallel disjoint") {
  const auto r =
      segment_intersection(seg(pt(0, 0), pt(1, 0)), seg(pt(0, 1), pt(1, 1)));
  CHECK(r.kind == IntersectKind::Empty);
}

TEST_CASE("segment intersection: skew but non-intersecting") {
  const auto r =
      segment_intersection(seg(pt(0, 0), pt(1, 1)), seg(pt(3, 0), pt(4, 5)));
  CHECK(r.kind == IntersectKind::Empty);
}

TEST_CASE("segment intersection: collinear overlap") {
  const auto r =
      segment_intersection(seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(3, 0)));
  REQUIRE(r.kind == IntersectKind::Overlap);
  CHECK(r.overlap == seg(pt(1, 0), pt(2, 0)));
}

TEST_CASE("segment intersection: collinear touch at one point") {
  const auto r =
      segment_intersection(seg(pt(0, 0), pt(1, 0)), seg(pt(1, 0), pt(2, 0)));
  REQUIRE(r.kind == IntersectKind::AtPoint);
  CHECK(r.point == pt(1, 0));
}

TEST_CASE("segment intersection: containment is an overlap") {
  const auto r =
      segment_intersection(seg(pt(0, 0), pt(4, 0)), seg(pt(1, 0), pt(2, 0)));
  REQUIRE(r.kind == IntersectKind::Overlap);
  CHECK(r.overlap == seg(pt(1, 0), pt(2, 0)));
}

TEST_CASE("segment intersection: endpoint touching interior") {
  const auto r =
      segment_intersection(seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(1, 5)));
  REQUIRE(r.kind == IntersectKind::AtPoint);
  CHECK(r.point == pt(1, 0));
}

TEST_CASE("segment intersection: shared endpoint only") {
  const auto r =
      segment_intersection(seg(pt(0, 0), pt(1, 1)), seg(pt(1, 1), pt(2, 0)));
  REQUIRE(r.kind == IntersectKind::AtPoint);
  CHECK(r.point == pt(1, 1));
}

TEST_CASE("segment intersection: exact rational crossing point") {
  const auto r =
      segment_intersection(seg(pt(0, 0), pt(3, 1)), seg(pt(0, 1), pt(3, 0)));
  REQUIRE(r.kind == IntersectKind::AtPoint);
  CHECK(r.point == ptd("3/2", "1/2"));
}

TEST_CASE("segment intersection is symmetric") {
  const std::vector<std::pair<Segment, Segment>> cases = {
      {seg(pt(0, 0), pt(2, 2)), seg(pt(0, 2), pt(2, 0))},
      {seg(pt(0, 0), pt(2, 0)), seg(pt(1, 0), pt(3, 0))},
      {seg(pt(0, 0), pt(1, 0)), seg(pt(0, 1), pt(1, 1))},
      {seg(pt(0, 0), pt(1, 0)), seg(pt(1, 0), pt(2, 0))},
      {seg(pt(0, 0), pt(3, 1)), seg(pt(0, 1), pt(3, 0))},
  };
  for (const auto& [s, t] : cases) {
    const auto a = segment_intersection(s, t);
    const auto b = segment_intersection(t, s);
    CHECK(a.kind == b.kind);
    if (a.kind == IntersectKind::AtPoint) CHECK(a.point == b.point);
    if (a.kind == IntersectKind::Overlap) CHECK(a.overlap == b.overlap);
  }
}

TEST_CASE("segment intersection rejects degenerate segments") {
  CHECK_THROWS_AS(
      segment_intersection(seg(pt(1, 1), pt(1, 1)), seg(pt(0, 0), pt(2, 0))),
      InputError);
}

TEST_CASE("point in polygon: unit square") {
  const Polygon sq = square(0, 0, 1);
  CHECK(point_in_polygon(ptd("0.5", "0.5"), sq) == PointLocation::Interior);
  CHECK(point_in_polygon(ptd("1", "0.5"), sq) == PointLocation::Boundary);
  CHECK(point_in_polygon(pt(0, 0), sq) == PointLocation::Boundary);
  CHECK(point_in_polygon(ptd("0.5", "0"), sq) == PointLocation::Boundary);
  CHECK(point_in_polygon(pt(2, 2), sq) == PointLocation::Exterior);
  // Exterior points whose test ray passes through vertices or along edges.
  CHECK(point_in_polygon(pt(-1, 0), sq) == PointLocation::Exterior);
  CHECK(point_in_polygon(pt(-1, 1), sq) == PointLocation::Exterior);
  CHECK(point_in_polygon(pt(2, 0), sq) == PointLocation::Exterior);
  CHECK(point_in_polygon(pt(2, 1), sq) == PointLocation::Exterior);
}

TEST_CASE("point in polygon: concave ring") {
  // L-shape: [0,2]^2 minus [1,2]^2.
  Polygon l;
  l.vertices = {pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)};
  CHECK(point_in_polygon(ptd("0.5", "1.5"), l) == PointLocation::Interior);
  CHECK(point_in_polygon(ptd("1.5", "0.5"), l) == PointLocation::Interior);
  CHECK(point_in_polygon(ptd("1.5", "1.5"), l) == PointLocation::Exterior);
  CHECK(point_in_polygon(pt(1, 1), l) == PointLocation::Boundary);
  CHECK(point_in_polygon(ptd("1", "1.5"), l) == PointLocation::Boundary);
  CHECK(point_in_polygon(ptd("0.5", "0.5"), l) == PointLocation::Interior);
}

TEST_CASE("point in polygon works on clockwise rings too") {
  Polygon cw;
  cw.vertices = {pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)};
  CHECK(point_in_polygon(ptd("0.5", "0.5"), cw) == PointLocation::Interior);
  CHECK(point_in_polygon(pt(3, 3), cw) == PointLocation::Exterior);
}

TEST_CASE("twice_signed_area") {
  CHECK(twice_signed_area(square(0, 0, 1).vertices) == Rational(2));
  CHECK(twice_signed_area({pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)}) ==
        Rational(-2));
  CHECK(twice_signed_area({pt(0, 0), pt(3, 0), pt(0, 4)}) == Rational(12));
}

TEST_CASE("ray_first_hit finds the nearest hit") {
  const std::vector<Segment> edges = {seg(pt(2, -1), pt(2, 1)),
                                      seg(pt(5, -1), pt(5, 1))};
  const auto t = ray_first_hit(pt(0, 0), pt(1, 0), edges);
  REQUIRE(t.has_value());
  CHECK(*t == Rational(2));
  CHECK_FALSE(ray_first_hit(pt(0, 0), pt(-1, 0), edges).has_value());
  // Collinear edge: the near endpoint is the first hit.
  const auto c = ray_first_hit(pt(0, 0), pt(1, 0),
                               {seg(pt(3, 0), pt(7, 0))});
  REQUIRE(c.has_value());
  CHECK(*c == Rational(3));
}

TEST_CASE("interior_point lies strictly inside") {
  std::vector<Polygon> polys;
  polys.push_back(square(0, 0, 1));
  polys.push_back(Polygon{{pt(0, 0), pt(3, 0), pt(0, 4)}, 0});
  polys.push_back(
      Polygon{{pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)}, 0});
  // Clockwise ring.
  polys.push_back(Polygon{{pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)}, 0});
  // Thin sliver where midpoint heuristics without exact arithmetic fail.
  polys.push_back(Polygon{{pt(0, 0), pt(1000000, 1), pt(1000000, 0)}, 0});
  for (const Polygon& p : polys) {
    CHECK(point_in_polygon(interior_point(p), p) == PointLocation::Interior);
  }
}

TEST_CASE("interiors_overlap") {
  const Polygon a = square(0, 0, 2);
  CHECK(interiors_overlap(a, square(1, 1, 2)));       // partial overlap
  CHECK_FALSE(interiors_overlap(a, square(2, 0, 2)));  // shared edge
  CHECK_FALSE(interiors_overlap(a, square(2, 2, 2)));  // shared corner
  CHECK_FALSE(interiors_overlap(a, square(5, 5, 1)));  // disjoint
  CHECK(interiors_overlap(square(0, 0, 3),
                          Polygon{{pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2)}, 0}));
  CHECK(interiors_overlap(a, a));  // identical
  // Plus-shaped crossing: edges cross but no vertex lies inside the other.
  Polygon horiz{{pt(-2, -1), pt(2, -1), pt(2, 1), pt(-2, 1)}, 0};
  Polygon vert{{pt(-1, -2), pt(1, -2), pt(1, 2), pt(-1, 2)}, 0};
  CHECK(interiors_overlap(horiz, vert));
  CHECK(interiors_overlap(vert, horiz));
}

TEST_CASE("interiors_overlap is symmetric") {
  const std::vector<std::pair<Polygon, Polygon>> cases = {
      {square(0, 0, 2), square(1, 1, 2)},
      {square(0, 0, 2), square(2, 0, 2)},
      {square(0, 0, 3), square(1, 1, 1)},
      {square(0, 0, 2), square(5, 5, 1)},
  };
  for (const auto& [p, q] : cases)
    CHECK(interiors_overlap(p, q) == interiors_overlap(q, p));
}

TEST_CASE("euclid_length") {
  CHECK(euclid_length(seg(pt(0, 0), pt(3, 4))) == 5.0);
  CHECK(euclid_length(seg(pt(0, 0), pt(1, 1))) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(euclid_length(seg(ptd("0.5", "0"), ptd("2.5", "0"))) == 2.0);
}

TEST_CASE("validate_instance accepts a good instance") {
  Instance inst;
  inst.num_colors = 2;
  inst.objects = {square(0, 0, 1, 0), square(3, 0, 1, 1)};
  const auto rep = validate_instance(inst);
  CHECK(rep.ok());
  CHECK(rep.warnings.empty());
}

TEST_CASE("validate_instance repairs clockwise rings with a warning") {
  Instance inst;
  inst.num_colors = 1;
  inst.objects = {Polygon{{pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)}, 0}};
  const auto rep = validate_instance(inst);
  CHECK(rep.ok());
  REQUIRE(rep.warnings.size() == 1);
  CHECK(rep.warnings[0].code == ValidationCode::ReversedOrientation);
  CHECK(twice_signed_area(inst.objects[0].vertices) == Rational(2));
}

TEST_CASE("validate_instance rejects bad polygons") {
  Instance two;
  two.num_colors = 1;
  two.objects = {Polygon{{pt(0, 0), pt(1, 0)}, 0}};
  CHECK(validate_instance(two).errors.at(0).code ==
        ValidationCode::TooFewVertices);

  Instance bowtie;
  bowtie.num_colors = 1;
  bowtie.objects = {Polygon{{pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)}, 0}};
  CHECK(validate_instance(bowtie).errors.at(0).code ==
        ValidationCode::NonSimplePolygon);

  Instance flat;
  flat.num_colors = 1;
  flat.objects = {Polygon{{pt(0, 0), pt(1, 0), pt(2, 0)}, 0}};
  CHECK_FALSE(validate_instance(flat).ok());

  Instance badcolor;
  badcolor.num_colors = 1;
  badcolor.objects = {square(0, 0, 1, 1)};
  CHECK(validate_instance(badcolor).errors.at(0).code ==
        ValidationCode::BadColorIndex);

  Instance overlap;
  overlap.num_colors = 1;
  overlap.objects = {square(0, 0, 2, 0), square(1, 1, 2, 0)};
  const auto rep = validate_instance(overlap);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.errors.at(0).code == ValidationCode::OverlappingInteriors);
  CHECK(rep.errors.at(0).object_a == 0);
  CHECK(rep.errors.at(0).object_b == 1);
}

TEST_CASE("validate_instance allows touching boundaries") {
  Instance inst;
  inst.num_colors = 2;
  inst.objects = {square(0, 0, 1, 0), square(1, 0, 1, 1)};
  CHECK(validate_instance(inst).ok());
}
