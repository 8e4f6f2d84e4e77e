#include "geomcut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "geomcut/errors.hpp"

namespace geomcut {

namespace {

constexpr long kDen = 1000000000;

Point round_to_grid(double x, double y) {
  return {Rational(std::llround(x * kDen), kDen), Rational(std::llround(y * kDen), kDen)};
}

int side_color(double dx, double dy) {
  if (std::abs(dy) < 0.5) return 0;      // horizontal side
  return dx * dy > 0 ? 1 : 2;            // slope +sqrt(3) vs -sqrt(3)
}

}  // namespace

Instance gen_lower_bound(int grid_k, double thickness) {
  if (grid_k < 1) throw InputError("grid_k must be at least 1");
  if (!(thickness >= 1e-6 && thickness <= 0.05))
    throw BadThickness("thickness must lie in [1e-6, 0.05], got " +
                       std::to_string(thickness));

  const double s3 = std::sqrt(3.0);
  auto lattice = [&](int i, int j) {
    return std::pair<double, double>{i * s3 + j * (s3 / 2.0), 1.5 * j};
  };

  Instance inst;
  inst.num_colors = 3;
  double t = thickness;

  // One strip per triangle side, flush against the side, inset 2t from both
  // ends, extending t into the triangle. Triangles sharing a side compute the
  // flush corners from bitwise-negated direction vectors, so both sides round
  // to identical points and the strips touch without overlapping.
  auto add_strips = [&](std::pair<double, double> v0, std::pair<double, double> v1,
                        std::pair<double, double> v2) {
    std::pair<double, double> tri[3] = {v0, v1, v2};
    for (int s = 0; s < 3; ++s) {
      auto [ax, ay] = tri[s];
      auto [bx, by] = tri[(s + 1) % 3];
      double ux = (bx - ax) / s3, uy = (by - ay) / s3;  // sides have length sqrt(3)
      double nx = -uy, ny = ux;                         // inward normal, triangles are CCW
      double c0x = ax + 2 * t * ux, c0y = ay + 2 * t * uy;
      double c1x = bx - 2 * t * ux, c1y = by - 2 * t * uy;
      Polygon strip;
      strip.vertices = {round_to_grid(c0x, c0y), round_to_grid(c1x, c1y),
                        round_to_grid(c1x + t * nx, c1y + t * ny),
                        round_to_grid(c0x + t * nx, c0y + t * ny)};
      strip.color = side_color(bx - ax, by - ay);
      inst.objects.push_back(std::move(strip));
    }
  };

  for (int j = 0; j < grid_k; ++j)
    for (int i = 0; i < grid_k; ++i) {
      auto a = lattice(i, j);
      auto b = lattice(i + 1, j);
      auto c = lattice(i, j + 1);
      auto d = lattice(i + 1, j + 1);
      add_strips(a, b, c);  // upward triangle
      add_strips(b, d, c);  // downward triangle
    }
  return inst;
}

namespace {

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return {};
  std::vector<Point> hull(2 * pts.size());
  std::size_t h = 0;
  for (const auto& p : pts) {  // lower chain
    while (h >= 2 && cross(hull[h - 2], hull[h - 1], p).sign() <= 0) --h;
    hull[h++] = p;
  }
  const std::size_t lo = h + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
    while (h >= lo && cross(hull[h - 2], hull[h - 1], *it).sign() <= 0) --h;
    hull[h++] = *it;
  }
  hull.resize(h - 1);
  return hull.size() >= 3 ? hull : std::vector<Point>{};
}

}  // namespace

Instance gen_random(const RandomParams& params) {
  if (params.num_objects < 1) throw InputError("need at least one object");
  if (params.num_colors < 1 || params.num_colors > params.num_objects)
    throw InputError("need 1 <= num_colors <= num_objects");
  if (params.coordinate_range < 3) throw InputError("coordinate_range must be >= 3");

  std::mt19937_64 rng(params.seed);
  // plain modulo keeps the stream identical across standard libraries
  auto draw = [&](long m) { return static_cast<long>(rng() % static_cast<std::uint64_t>(m)); };
  const long range = params.coordinate_range;

  Instance inst;
  inst.num_colors = params.num_colors;
  long attempts_left = 1000L * params.num_objects;

  for (int o = 0; o < params.num_objects; ++o) {
    while (true) {
      if (--attempts_left < 0)
        throw GenerationTimeout("could not place " + std::to_string(params.num_objects) +
                                " disjoint objects in range " + std::to_string(range));
      Polygon cand;
      cand.color = o % params.num_colors;
      if (draw(4) != 0) {
        long x0 = draw(range), y0 = draw(range);
        long wmax = std::min(range - x0, std::max(2L, range / 3));
        long hmax = std::min(range - y0, std::max(2L, range / 3));
        long w = 1 + draw(wmax), h = 1 + draw(hmax);
        cand.vertices = {{Rational(x0), Rational(y0)},
                         {Rational(x0 + w), Rational(y0)},
                         {Rational(x0 + w), Rational(y0 + h)},
                         {Rational(x0), Rational(y0 + h)}};
      } else {
        long cx = draw(range + 1), cy = draw(range + 1);
        long span = 2 + draw(std::max(1L, range / 3));
        long npts = 3 + draw(4);
        std::vector<Point> pts;
        for (long p = 0; p < npts; ++p) {
          long x = std::clamp(cx - span + draw(2 * span + 1), 0L, range);
          long y = std::clamp(cy - span + draw(2 * span + 1), 0L, range);
          pts.push_back({Rational(x), Rational(y)});
        }
        cand.vertices = convex_hull(std::move(pts));
        if (cand.vertices.size() < 3) continue;
      }
      bool clashes = false;
      for (const auto& placed : inst.objects)
        if (interiors_overlap(cand, placed)) {
          clashes = true;
          break;
        }
      if (clashes) continue;
      inst.objects.push_back(std::move(cand));
      break;
    }
  }
  return inst;
}

}  // namespace geomcut
