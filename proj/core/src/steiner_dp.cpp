#include "geomcut/steiner_dp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>

#include "geomcut/errors.hpp"

namespace geomcut {

double WeightedTree::total_length() const {
  double total = 0.0;
  for (std::size_t i = 1; i < nodes.size(); ++i) total += nodes[i].parent_len;
  return total;
}

namespace {

void check_tree(const WeightedTree& t) {
  if (t.nodes.empty()) throw MalformedTree("empty tree");
  if (t.nodes[0].children.size() != 1)
    throw MalformedTree("the root must be a leaf with one edge");
  for (std::size_t i = 1; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    if (!(n.parent_len > 0.0)) throw MalformedTree("edge lengths must be positive");
    if (!n.children.empty() && n.children.size() != 2)
      throw MalformedTree("internal vertex of degree " +
                          std::to_string(n.children.size() + 1) + ", expected 3");
  }
}

std::vector<int> postorder(const WeightedTree& t) {
  std::vector<int> order, stack = {0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : t.nodes[v].children) stack.push_back(c);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

WeightedTree parse_tree(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == ')') {
      if (!cur.empty()) tokens.push_back(cur), cur.clear();
      tokens.push_back(std::string(1, ch));
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(cur), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  if (tokens.empty()) throw MalformedTree("empty tree text");

  WeightedTree t;
  t.nodes.push_back({});  // root leaf
  std::size_t pos = 0;

  std::function<int(int)> parse_subtree = [&](int parent) -> int {
    if (pos >= tokens.size()) throw MalformedTree("unexpected end of tree text");
    const std::string& tok = tokens[pos++];
    double len;
    try {
      std::size_t used = 0;
      len = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw MalformedTree("expected an edge length, got \"" + tok + "\"");
    }
    if (!(len > 0.0) || !std::isfinite(len))
      throw MalformedTree("edge lengths must be positive, got " + tok);
    int id = static_cast<int>(t.nodes.size());
    t.nodes.push_back({parent, len, {}});
    t.nodes[parent].children.push_back(id);
    if (pos < tokens.size() && tokens[pos] == "(") {
      ++pos;
      parse_subtree(id);
      parse_subtree(id);
      if (pos >= tokens.size() || tokens[pos] != ")")
        throw MalformedTree("expected \")\" after two subtrees");
      ++pos;
    }
    return id;
  };
  parse_subtree(0);
  if (pos != tokens.size()) throw MalformedTree("trailing tokens after the tree");
  check_tree(t);
  return t;
}

std::string format_tree(const WeightedTree& t) {
  std::ostringstream os;
  os.precision(17);
  std::function<void(int)> emit = [&](int v) {
    os << t.nodes[v].parent_len;
    if (!t.nodes[v].children.empty()) {
      os << " ( ";
      emit(t.nodes[v].children[0]);
      os << " ";
      emit(t.nodes[v].children[1]);
      os << " )";
    }
  };
  emit(t.nodes[0].children[0]);
  return os.str();
}

namespace {

void check_result(const WeightedTree& t, const DuplicationResult& r) {
  std::vector<char> dup(t.nodes.size(), 0);
  double sum = 0.0;
  for (int c : r.duplicated) {
    dup[c] = 1;
    sum += t.nodes[c].parent_len;
  }
  if (std::abs(sum - r.cost) > 1e-9 * std::max(1.0, r.cost))
    throw InternalError("duplication cost does not match the edge set");
  for (std::size_t v = 1; v < t.nodes.size(); ++v) {
    if (t.nodes[v].children.empty()) continue;
    // degree-3 vertex: doubling an odd number of incident edges evens it out
    int doubled = dup[v];
    for (int c : t.nodes[v].children) doubled += dup[c];
    if (doubled % 2 == 0)
      throw InternalError("vertex " + std::to_string(v) + " keeps odd degree");
  }
  double bound = t.total_length() / 3.0 + 1e-9;
  if (r.cost > bound)
    throw InternalError("duplication cost " + std::to_string(r.cost) +
                        " exceeds a third of the tree length");
}

}  // namespace

DuplicationResult min_duplication(const WeightedTree& t) {
  check_tree(t);
  const std::size_t n = t.nodes.size();
  DuplicationResult res;
  res.table.assign(n, {0.0, 0.0});
  // choice[v][s]: which child states realize U_s at v (internal nodes only)
  std::vector<std::array<std::pair<int, int>, 2>> choice(n);
  std::vector<double> subtree_len(n, 0.0);

  for (int v : postorder(t)) {
    if (v == 0) continue;
    const auto& node = t.nodes[v];
    double len = node.parent_len;
    subtree_len[v] = len;
    if (node.children.empty()) {
      res.table[v] = {0.0, len};
    } else {
      int l = node.children[0], r = node.children[1];
      subtree_len[v] += subtree_len[l] + subtree_len[r];
      auto [l1, l2] = res.table[l];
      auto [r1, r2] = res.table[r];
      // exactly one child edge doubled when the parent edge stays single
      if (l1 + r2 <= l2 + r1) {
        res.table[v].first = l1 + r2;
        choice[v][0] = {1, 2};
      } else {
        res.table[v].first = l2 + r1;
        choice[v][0] = {2, 1};
      }
      // both or neither child edge doubled when the parent edge is doubled
      if (l1 + r1 <= l2 + r2) {
        res.table[v].second = l1 + r1 + len;
        choice[v][1] = {1, 1};
      } else {
        res.table[v].second = l2 + r2 + len;
        choice[v][1] = {2, 2};
      }
    }
    double u1 = res.table[v].first, u2 = res.table[v].second;
    if (2 * u1 + u2 > subtree_len[v] + 1e-9 * std::max(1.0, subtree_len[v]))
      throw InternalError("2*U1 + U2 exceeded the subtree length at node " +
                          std::to_string(v));
  }

  int top = t.nodes[0].children[0];
  auto [u1, u2] = res.table[top];
  res.cost = std::min(u1, u2);

  std::vector<std::pair<int, int>> stack = {{top, u1 <= u2 ? 1 : 2}};
  while (!stack.empty()) {
    auto [v, state] = stack.back();
    stack.pop_back();
    if (state == 2) res.duplicated.push_back(v);
    if (t.nodes[v].children.empty()) continue;
    auto [ls, rs] = choice[v][state - 1];
    stack.push_back({t.nodes[v].children[0], ls});
    stack.push_back({t.nodes[v].children[1], rs});
  }
  std::sort(res.duplicated.begin(), res.duplicated.end());
  check_result(t, res);
  return res;
}

DuplicationResult brute_force_duplication(const WeightedTree& t) {
  check_tree(t);
  const int m = static_cast<int>(t.nodes.size()) - 1;  // edges, named by child ids 1..m
  if (m > 22)
    throw TooLarge(static_cast<std::uint64_t>(m), 22,
                   "exhaustive duplication over " + std::to_string(m) + " edges");

  double best = -1.0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    for (int v = 1; v <= m && ok; ++v) {
      if (t.nodes[v].children.empty()) continue;
      int doubled = (mask >> (v - 1)) & 1;
      for (int c : t.nodes[v].children) doubled += (mask >> (c - 1)) & 1;
      ok = doubled % 2 == 1;
    }
    if (!ok) continue;
    double cost = 0.0;
    for (int v = 1; v <= m; ++v)
      if ((mask >> (v - 1)) & 1) cost += t.nodes[v].parent_len;
    if (best < 0.0 || cost < best) {
      best = cost;
      best_mask = mask;
    }
  }
  if (best < 0.0) throw InternalError("no parity-feasible duplication exists");

  DuplicationResult res;
  res.cost = best;
  for (int v = 1; v <= m; ++v)
    if ((best_mask >> (v - 1)) & 1) res.duplicated.push_back(v);
  res.table.assign(t.nodes.size(), {0.0, 0.0});
  check_result(t, res);
  return res;
}

}  // namespace geomcut
