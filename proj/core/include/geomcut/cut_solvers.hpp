#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "geomcut/dual_graph.hpp"

namespace geomcut {

struct Cut {
  double value = 0.0;
  std::vector<int> edges;  // dual edge ids, ascending
  // per-node colors for labeling-based solvers; for plain max-flow, 0 marks
  // the source-side nodes and 1 the rest
  std::optional<std::vector<int>> labeling;
};

// 2^25 unless GEOMCUT_ORACLE_BUDGET overrides it.
std::uint64_t default_oracle_budget();

// Exact min cut between two node sets. Cut edges are the residual-reachable
// boundary after a deterministic augmenting-path max-flow; ties break by the
// fixed traversal order, making the output deterministic.
Cut max_flow_min_cut(const DualGraph& g, const std::vector<int>& sources,
                     const std::vector<int>& sinks);

// Union of the k-1 cheapest single-color isolating cuts; within factor
// (2 - 2/k) of the optimal multiway cut.
Cut isolation_heuristic(const AugmentedGraph& ag);

// Exhaustive optimum over all colorings of non-terminal nodes. Refuses when
// k^(free nodes) exceeds the budget.
Cut brute_force_labeling(const DualGraph& g, int k, std::uint64_t budget = 0);

}  // namespace geomcut
