#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geomcut/geometry.hpp"

namespace geomcut {

struct Instance;

// Planar subdivision of a segment set. Half-edge ids pair as (2e, 2e+1) for
// undirected edge e; twin(h) == h^1. Each half-edge keeps its face on the left.
struct Arrangement {
  struct Edge {
    int u, v;       // vertex ids, u < v
    double length;  // euclid_length of the segment
  };
  struct HalfEdge {
    int origin;
    int next;
    int prev;
    int face;
  };
  struct Face {
    int id;
    bool bounded;
    std::optional<int> object;  // object whose interior this face is
    Point representative;       // exact point strictly inside the face
    std::vector<int> outer;              // CCW half-edge cycle; empty iff unbounded
    std::vector<std::vector<int>> holes; // inner boundary cycles
  };

  std::vector<Point> vertices;
  std::vector<Edge> edges;
  std::vector<HalfEdge> half_edges;
  std::vector<Face> faces;
  int outer_face = 0;  // the unbounded face
  int components = 0;  // connected components of the segment union

  int dest(int h) const { return half_edges[h ^ 1].origin; }
  Segment edge_segment(int e) const {
    return {vertices[edges[e].u], vertices[edges[e].v]};
  }
  std::pair<int, int> edge_faces(int e) const {
    return {half_edges[2 * e].face, half_edges[2 * e + 1].face};
  }
  int vertex_id(const Point& p) const;  // -1 when absent
};

// Splits segments at every pairwise intersection, then builds the subdivision.
// Verifies V - E + F = 1 + C and every representative point's location.
Arrangement build_arrangement(const std::vector<Segment>& segs);

// Tags each object's interior face. Requires the arrangement to have been
// built from free_segments(inst), so each object interior is one face.
void locate_object_faces(Arrangement& arr, const Instance& inst);

// Sum of border edge lengths; an edge with the face on both sides counts twice.
double face_boundary_length(const Arrangement& arr, int f);

// Line-oriented stable dump of V/E/F for golden-file comparisons.
std::string dump(const Arrangement& arr);

}  // namespace geomcut
