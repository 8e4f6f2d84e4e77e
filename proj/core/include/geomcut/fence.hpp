#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geomcut/cut_solvers.hpp"
#include "geomcut/visibility.hpp"

namespace geomcut {

struct Fence {
  std::vector<Segment> segments;  // arrangement edges, exact endpoints
  double total_length = 0.0;
  std::optional<Cut> source_cut;
};

// The geometric fence realizing a dual cut: the union of the cut edges'
// provenance arrangement edges. total_length must reproduce the cut value.
Fence extract_fence(const Arrangement& arr, const DualGraph& g, const Cut& cut);

struct SeparationReport {
  bool valid = false;
  std::vector<std::pair<int, int>> violations;  // object id pairs left connected
  std::vector<std::string> notes;
};

// Independent separation check: rebuilds an arrangement from the fence plus
// all object edges and verifies no region reachable without crossing the
// fence touches two colors.
SeparationReport validate_fence(const Instance& inst, const Fence& fence);

// Deterministic SVG figure of the instance, optionally with a fence overlay.
std::string render_svg(const Instance& inst, const Fence* fence);
void export_svg(const Instance& inst, const Fence* fence, const std::string& path);

enum class Method { Auto, Exact2, Isolation, BruteForce };

struct Pipeline {
  Instance instance;  // validated; rings counterclockwise
  SegmentSet segments;
  Arrangement arr;
  DualGraph dual;
};

// validate -> free segments -> arrangement -> object faces -> dual graph.
Pipeline build_pipeline(Instance inst);

struct SolveResult {
  Cut cut;
  Fence fence;
};

// End-to-end solve. Auto picks the exact flow solver for k=2 and the
// isolation heuristic otherwise; instances whose objects span at most one
// color yield an empty fence. budget 0 means default_oracle_budget().
SolveResult solve_instance(Instance inst, Method method = Method::Auto,
                           std::uint64_t budget = 0);

// The k=2 pipeline by itself (auto method on a 2-color instance).
Fence solve_two_color(const Instance& inst);

}  // namespace geomcut
