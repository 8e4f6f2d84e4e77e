#pragma once

#include <map>
#include <utility>
#include <vector>

#include "geomcut/geometry.hpp"

namespace geomcut {

struct SegmentSet {
  std::vector<Segment> segments;
  // corner location -> every (object, vertex index) sitting there
  std::map<Point, std::vector<std::pair<int, int>>> corner_index;
};

// All distinct object vertices, sorted lexicographically.
std::vector<Point> corners(const Instance& inst);

// True when the segment's relative interior avoids every object's interior.
// Touching boundaries (including running along an edge) is allowed.
bool is_free(const Segment& s, const Instance& inst);

// Resolves collinear overlaps: each segment is split where others collinearly
// overlap it, then the pieces are deduplicated. Output segments never share
// more than one point, though they may still cross at non-endpoints.
std::vector<Segment> canonicalize_segments(std::vector<Segment> segs);

// Candidate chords between every pair of corners plus all object edges,
// filtered by is_free and canonicalized.
SegmentSet free_segments(const Instance& inst);

}  // namespace geomcut
