#include "geomcut/cut_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "geomcut/errors.hpp"

namespace geomcut {

std::uint64_t default_oracle_budget() {
  if (const char* env = std::getenv("GEOMCUT_ORACLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 25;
}

namespace {

// Dinic over an undirected edge list: each input edge becomes a pair of
// mutually-reversed arcs with the full capacity on both, so flow can use the
// edge in either direction up to its weight.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : adj_(n) {}

  void add_pair(int u, int v, double cap_uv, double cap_vu) {
    adj_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap_uv, 0});
    adj_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, cap_vu, 0});
    arcs_[arcs_.size() - 2].rev = static_cast<int>(arcs_.size() - 1);
    arcs_[arcs_.size() - 1].rev = static_cast<int>(arcs_.size() - 2);
  }

  double max_flow(int s, int t) {
    double total = 0.0;
    while (bfs(s, t)) {
      iter_.assign(adj_.size(), 0);
      while (true) {
        double pushed = dfs(s, t, std::numeric_limits<double>::infinity());
        if (pushed <= 0.0) break;
        total += pushed;
      }
    }
    return total;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a : adj_[u]) {
        const Arc& arc = arcs_[a];
        if (arc.cap > 0.0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          q.push(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    double cap;  // residual capacity
    int rev;
  };

  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a : adj_[u]) {
        const Arc& arc = arcs_[a];
        if (arc.cap > 0.0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[u] + 1;
          q.push(arc.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  double dfs(int u, int t, double limit) {
    if (u == t) return limit;
    for (int& i = iter_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      Arc& arc = arcs_[adj_[u][i]];
      if (arc.cap <= 0.0 || level_[arc.to] != level_[u] + 1) continue;
      double pushed = dfs(arc.to, t, std::min(limit, arc.cap));
      if (pushed > 0.0) {
        arc.cap -= pushed;
        arcs_[arc.rev].cap += pushed;
        return pushed;
      }
    }
    return 0.0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

struct MinCut {
  double flow = 0.0;
  double cut_value = 0.0;
  std::vector<int> cut_edges;       // indices into the edge list
  std::vector<char> source_side;    // per node
};

MinCut edge_list_min_cut(int num_nodes, const std::vector<DualGraph::Edge>& edges,
                         const std::vector<int>& sources, const std::vector<int>& sinks) {
  double sentinel = 1.0;
  for (const auto& e : edges) sentinel += e.weight;

  int s = num_nodes, t = num_nodes + 1;
  FlowNetwork net(num_nodes + 2);
  for (const auto& e : edges) net.add_pair(e.u, e.v, e.weight, e.weight);
  // the sentinel exceeds any achievable flow, so these arcs never saturate
  for (int src : sources) net.add_pair(s, src, sentinel, 0.0);
  for (int snk : sinks) net.add_pair(snk, t, sentinel, 0.0);

  MinCut r;
  r.flow = net.max_flow(s, t);
  std::vector<char> reach = net.residual_reachable(s);
  r.source_side.assign(reach.begin(), reach.begin() + num_nodes);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (r.source_side[edges[i].u] != r.source_side[edges[i].v]) {
      r.cut_edges.push_back(static_cast<int>(i));
      r.cut_value += edges[i].weight;
    }
  }
  double tol = 1e-9 * std::max(1.0, r.flow);
  if (std::abs(r.cut_value - r.flow) > tol)
    throw InternalError("cut value " + std::to_string(r.cut_value) +
                        " does not match flow " + std::to_string(r.flow));
  return r;
}

}  // namespace

Cut max_flow_min_cut(const DualGraph& g, const std::vector<int>& sources,
                     const std::vector<int>& sinks) {
  if (sources.empty() || sinks.empty())
    throw NoSeparationNeeded("max flow needs nonempty source and sink sets");
  std::vector<char> is_source(g.num_nodes, 0);
  for (int v : sources) is_source.at(v) = 1;
  for (int v : sinks)
    if (is_source.at(v))
      throw NoSeparationNeeded("node " + std::to_string(v) + " is both source and sink");

  MinCut mc = edge_list_min_cut(g.num_nodes, g.edges, sources, sinks);
  Cut cut;
  cut.value = mc.cut_value;
  cut.edges = mc.cut_edges;
  std::vector<int> side(g.num_nodes);
  for (int v = 0; v < g.num_nodes; ++v) side[v] = mc.source_side[v] ? 0 : 1;
  cut.labeling = std::move(side);
  return cut;
}

Cut isolation_heuristic(const AugmentedGraph& ag) {
  int k = static_cast<int>(ag.apex.size());
  if (k < 2) throw NoSeparationNeeded("isolation needs at least two colors");
  if (!ag.empty_colors.empty()) {
    std::string cs;
    for (int c : ag.empty_colors) cs += (cs.empty() ? "" : ", ") + std::to_string(c);
    throw EmptyColorClass("no objects of color " + cs);
  }

  std::vector<DualGraph::Edge> all = ag.base.edges;
  all.insert(all.end(), ag.apex_edges.begin(), ag.apex_edges.end());
  const int base_edges = static_cast<int>(ag.base.edges.size());

  struct Iso {
    double value;
    int color;
    std::vector<int> edges;
  };
  std::vector<Iso> cuts;
  for (int c = 0; c < k; ++c) {
    std::vector<int> sinks;
    for (int j = 0; j < k; ++j)
      if (j != c) sinks.push_back(ag.apex[j]);
    MinCut mc = edge_list_min_cut(ag.num_nodes(), all, {ag.apex[c]}, sinks);
    for (int e : mc.cut_edges)
      if (e >= base_edges) throw InternalError("apex edge appeared in an isolating cut");
    cuts.push_back({mc.cut_value, c, std::move(mc.cut_edges)});
  }

  std::sort(cuts.begin(), cuts.end(), [](const Iso& a, const Iso& b) {
    return a.value != b.value ? a.value < b.value : a.color < b.color;
  });
  int dropped_color = cuts.back().color;
  cuts.pop_back();

  std::vector<int> unioned;
  for (const auto& c : cuts) unioned.insert(unioned.end(), c.edges.begin(), c.edges.end());
  std::sort(unioned.begin(), unioned.end());
  unioned.erase(std::unique(unioned.begin(), unioned.end()), unioned.end());

  Cut cut;
  cut.edges = unioned;
  for (int e : unioned) cut.value += ag.base.edges[e].weight;

  // Label nodes by connected component after removing the cut; a component
  // may contain terminals of at most one color, the rest follow the dropped
  // color's territory.
  std::vector<int> parent(ag.base.num_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> in_cut(ag.base.edges.size(), 0);
  for (int e : unioned) in_cut[e] = 1;
  for (std::size_t e = 0; e < ag.base.edges.size(); ++e)
    if (!in_cut[e]) parent[find(ag.base.edges[e].u)] = find(ag.base.edges[e].v);

  std::vector<int> comp_color(ag.base.num_nodes, -1);
  for (int v = 0; v < ag.base.num_nodes; ++v) {
    int c = ag.base.node_color[v];
    if (c < 0) continue;
    int root = find(v);
    if (comp_color[root] >= 0 && comp_color[root] != c)
      throw InternalError("isolating cut union left two colors connected");
    comp_color[root] = c;
  }
  std::vector<int> labels(ag.base.num_nodes);
  for (int v = 0; v < ag.base.num_nodes; ++v) {
    int c = comp_color[find(v)];
    labels[v] = c >= 0 ? c : dropped_color;
  }
  cut.labeling = std::move(labels);
  return cut;
}

namespace {

double labeling_value(const DualGraph& g, const std::vector<int>& labels) {
  double v = 0.0;
  for (const auto& e : g.edges)
    if (labels[e.u] != labels[e.v]) v += e.weight;
  return v;
}

}  // namespace

Cut brute_force_labeling(const DualGraph& g, int k, std::uint64_t budget) {
  if (k < 1) throw InputError("need at least one color");
  if (budget == 0) budget = default_oracle_budget();

  std::vector<int> free_nodes;
  for (int v = 0; v < g.num_nodes; ++v)
    if (g.node_color[v] < 0) free_nodes.push_back(v);
  const int f = static_cast<int>(free_nodes.size());

  if (k > 1) {
    std::uint64_t need = 1;
    for (int i = 0; i < f; ++i) {
      if (need > budget / static_cast<std::uint64_t>(k)) {
        std::uint64_t max_f = 0, acc = 1;
        while (acc <= budget / static_cast<std::uint64_t>(k)) {
          acc *= static_cast<std::uint64_t>(k);
          ++max_f;
        }
        throw TooLarge(static_cast<std::uint64_t>(f), max_f,
                       "labeling oracle: k^f = " + std::to_string(k) + "^" +
                           std::to_string(f) + " exceeds budget " + std::to_string(budget));
      }
      need *= static_cast<std::uint64_t>(k);
    }
  }

  std::vector<int> labels(g.num_nodes, 0);
  for (int v = 0; v < g.num_nodes; ++v)
    if (g.node_color[v] >= 0) labels[v] = g.node_color[v];

  double best_val = labeling_value(g, labels);
  std::vector<int> best_labels = labels;

  if (k > 1 && f > 0) {
    auto adj = g.adjacency();
    double cur = best_val;

    // Loopless reflected mixed-radix Gray enumeration: exactly one digit
    // moves by one per visit, so the cut value updates incrementally. Sums
    // are rebased exactly before any best update and every 4096 steps to
    // stop floating-point drift.
    std::vector<int> a(f, 0), o(f, 1), fp(f + 1);
    std::iota(fp.begin(), fp.end(), 0);
    std::uint64_t step = 0;
    while (true) {
      int j = fp[0];
      fp[0] = 0;
      if (j == f) break;
      int node = free_nodes[j];
      int old_label = a[j];
      a[j] += o[j];
      int new_label = a[j];
      for (const auto& [eid, nb] : adj[node]) {
        double w = g.edges[eid].weight;
        if (labels[nb] != old_label) cur -= w;
        if (labels[nb] != new_label) cur += w;
      }
      labels[node] = new_label;
      if (a[j] == 0 || a[j] == k - 1) {
        o[j] = -o[j];
        fp[j] = fp[j + 1];
        fp[j + 1] = j + 1;
      }
      if (++step % 4096 == 0) cur = labeling_value(g, labels);
      if (cur < best_val + 1e-7) {
        double exact = labeling_value(g, labels);
        cur = exact;
        if (exact < best_val) {
          best_val = exact;
          best_labels = labels;
        }
      }
    }
  }

  Cut cut;
  cut.labeling = best_labels;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (best_labels[g.edges[e].u] != best_labels[g.edges[e].v]) {
      cut.edges.push_back(static_cast<int>(e));
      cut.value += g.edges[e].weight;
    }
  return cut;
}

}  // namespace geomcut
