#pragma once

#include <string>
#include <utility>
#include <vector>

namespace geomcut {

// Full binary tree rooted at a leaf: the root has one child, every other
// internal vertex has a parent and exactly two children (degree 3), and each
// non-root node carries the length of the edge to its parent.
struct WeightedTree {
  struct Node {
    int parent = -1;
    double parent_len = 0.0;  // length of the edge (node, parent); unused at the root
    std::vector<int> children;
  };
  std::vector<Node> nodes;  // nodes[0] is the root leaf

  double total_length() const;
};

// Grammar (whitespace separated, preorder):
//   tree    := subtree                      the root leaf's single edge
//   subtree := LENGTH                       edge ending in a leaf
//            | LENGTH "(" subtree subtree ")"   edge ending in a degree-3 vertex
// Example: "1 (1 1)" is a unit star with three edges. Node ids follow parse
// order with the root as 0. Throws MalformedTree.
WeightedTree parse_tree(const std::string& text);
std::string format_tree(const WeightedTree& t);

struct DuplicationResult {
  double cost = 0.0;
  // duplicated edges, each named by its child node id, ascending
  std::vector<int> duplicated;
  // per node (U1, U2): cheapest duplication of the subtree hanging off the
  // node's parent edge with that edge kept single (U1) or doubled (U2).
  // Zeros at the root, which has no parent edge.
  std::vector<std::pair<double, double>> table;
};

// Minimum total length of edges to double so that every degree-3 vertex ends
// up with even degree; leaves are unconstrained. Exact DP with backtracking.
DuplicationResult min_duplication(const WeightedTree& t);

// Exhaustive oracle over all edge subsets; at most 22 edges.
DuplicationResult brute_force_duplication(const WeightedTree& t);

}  // namespace geomcut
