#include "geomcut/dual_graph.hpp"

#include <algorithm>
#include <map>

#include "geomcut/errors.hpp"

namespace geomcut {

double DualGraph::total_weight() const {
  double w = 0.0;
  for (const auto& e : edges) w += e.weight;
  return w;
}

std::vector<std::vector<std::pair<int, int>>> DualGraph::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(num_nodes);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].push_back({static_cast<int>(i), edges[i].v});
    adj[edges[i].v].push_back({static_cast<int>(i), edges[i].u});
  }
  return adj;
}

DualGraph build_dual(const Arrangement& arr, const Instance& inst) {
  DualGraph g;
  g.num_nodes = static_cast<int>(arr.faces.size());

  std::map<std::pair<int, int>, std::vector<int>> shared;
  for (std::size_t e = 0; e < arr.edges.size(); ++e) {
    auto [f1, f2] = arr.edge_faces(static_cast<int>(e));
    if (f1 == f2) continue;  // bridge edge: both sides in one face, no adjacency
    shared[{std::min(f1, f2), std::max(f1, f2)}].push_back(static_cast<int>(e));
  }
  for (auto& [fp, es] : shared) {
    double w = 0.0;
    for (int e : es) w += arr.edges[e].length;
    g.edges.push_back({fp.first, fp.second, w, std::move(es)});
  }

  g.terminals.assign(inst.num_colors, {});
  g.node_color.assign(g.num_nodes, -1);
  for (const auto& f : arr.faces) {
    if (!f.object) continue;
    int c = inst.objects[*f.object].color;
    g.terminals[c].push_back(f.id);
    g.node_color[f.id] = c;
  }
  for (auto& t : g.terminals) std::sort(t.begin(), t.end());
  return g;
}

AugmentedGraph add_apexes(const DualGraph& g, int k) {
  AugmentedGraph ag;
  ag.base = g;
  ag.apex_weight = g.total_weight() + 1.0;
  for (int c = 0; c < k; ++c) {
    int apex = g.num_nodes + c;
    ag.apex.push_back(apex);
    const auto& term =
        c < static_cast<int>(g.terminals.size()) ? g.terminals[c] : std::vector<int>{};
    if (term.empty()) ag.empty_colors.push_back(c);
    for (int t : term) ag.apex_edges.push_back({t, apex, ag.apex_weight, {}});
  }
  return ag;
}

}  // namespace geomcut
