#pragma once

#include <cstdint>

#include "geomcut/geometry.hpp"

namespace geomcut {

// Rhombic grid_k x grid_k tiling of equilateral triangles with side sqrt(3);
// each triangle side carries a thin rectangle of the given thickness inside
// the triangle, colored by the side's orientation (3 colors). Coordinates are
// rounded to rationals with denominator 10^9.
Instance gen_lower_bound(int grid_k, double thickness);

struct RandomParams {
  std::uint64_t seed = 1;
  int num_objects = 2;
  int num_colors = 2;
  int coordinate_range = 10;  // corners land in [0, range]^2
};

// Deterministic seeded instance: axis-aligned rectangles and small convex
// hulls on integer corners, rejection-sampled to keep interiors disjoint,
// colors round-robin. Identical parameters give identical instances on every
// platform (no distribution objects, plain modulo draws).
Instance gen_random(const RandomParams& params);

}  // namespace geomcut
