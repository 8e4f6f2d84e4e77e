#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geomcut/rational.hpp"

namespace geomcut {

struct Segment {
  Point a;
  Point b;
  bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
  std::strong_ordering operator<=>(const Segment& o) const {
    auto c = a <=> o.a;
    return c != 0 ? c : b <=> o.b;
  }
};

// endpoints sorted so a <= b
Segment canonical(Segment s);

struct Polygon {
  std::vector<Point> vertices;  // CCW, simple
  int color = 0;
};

struct Instance {
  int num_colors = 1;
  std::vector<Polygon> objects;
};

// Sign of (q−p) x (r−p): +1 left turn, −1 right turn, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

enum class IntersectKind { Empty, AtPoint, Overlap };

struct Intersection {
  IntersectKind kind = IntersectKind::Empty;
  Point point;      // valid iff kind == AtPoint
  Segment overlap;  // valid iff kind == Overlap; maximal shared sub-segment, canonical
};

Intersection segment_intersection(const Segment& s, const Segment& t);

enum class PointLocation { Interior, Boundary, Exterior };

PointLocation point_in_polygon(const Point& p, const Polygon& poly);

// Twice the signed area of the closed ring (positive for CCW).
Rational twice_signed_area(const std::vector<Point>& ring);

// Smallest t > 0 with origin + t*dir on one of the closed segments, or nullopt.
std::optional<Rational> ray_first_hit(const Point& origin, const Point& dir,
                                      const std::vector<Segment>& edges);

// Deterministic exact point strictly inside a simple polygon (any orientation).
Point interior_point(const Polygon& poly);

// Exact test: do the open interiors of two simple polygons intersect?
bool interiors_overlap(const Polygon& p, const Polygon& q);

double euclid_length(const Segment& s);

enum class ValidationCode {
  TooFewVertices,
  NonSimplePolygon,
  ZeroAreaPolygon,
  BadColorIndex,
  OverlappingInteriors,
  ReversedOrientation,  // warning only; ring repaired in place
};

struct ValidationIssue {
  ValidationCode code;
  int object_a = -1;
  int object_b = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;
  bool ok() const { return errors.empty(); }
};

// Validates the instance; CW rings are reversed in place with a warning.
ValidationReport validate_instance(Instance& inst);

}  // namespace geomcut
