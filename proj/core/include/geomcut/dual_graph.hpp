#pragma once

#include <vector>

#include "geomcut/arrangement.hpp"

namespace geomcut {

// Face-adjacency graph of an arrangement. Node ids are face ids; an edge's
// weight is the total length of the boundary shared by its two faces, with
// the contributing arrangement edge ids kept as provenance.
struct DualGraph {
  struct Edge {
    int u, v;  // face ids, u < v
    double weight;
    std::vector<int> provenance;  // arrangement edge ids, ascending
  };
  int num_nodes = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> terminals;  // [color] -> face ids, ascending
  std::vector<int> node_color;              // -1 for non-terminal faces

  double total_weight() const;
  // node -> list of (edge id, neighbor node)
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;
};

DualGraph build_dual(const Arrangement& arr, const Instance& inst);

// Dual graph plus one apex node per color, wired to that color's terminals
// with a weight no minimal cut can afford.
struct AugmentedGraph {
  DualGraph base;
  std::vector<int> apex;  // apex node id per color; ids start at base.num_nodes
  double apex_weight = 0.0;
  std::vector<DualGraph::Edge> apex_edges;
  std::vector<int> empty_colors;  // colors with no terminal (flagged, not fatal)

  int num_nodes() const { return base.num_nodes + static_cast<int>(apex.size()); }
};

AugmentedGraph add_apexes(const DualGraph& g, int k);

}  // namespace geomcut
