#pragma once

#include <vector>

#include "treecones/graph.hpp"

namespace treecones {

// The partial order induced by rooting a spanning tree at 0:
// i precedes j iff i lies on the tree path from 0 to j.
class TreePartialOrder {
 public:
  explicit TreePartialOrder(const SpanningTree& tree);

  int n() const { return n_; }
  int parent(int v) const { return parent_[v]; }
  bool precedes(int i, int j) const;

 private:
  int n_;
  std::vector<int> parent_;
};

TreePartialOrder tree_partial_order(const SpanningTree& tree);

// True iff some full ordering of [0:n] extends both tree orders, i.e. the
// union of the two ancestor relations is acyclic. This is C(T, T') as a bool.
bool compatible(const SpanningTree& a, const SpanningTree& b);

// All permutations s with compatible(tree, path_tree(s)), equivalently all
// topological orders of the rooted tree; lexicographic output order.
std::vector<Permutation> linear_extensions(const SpanningTree& tree);

}  // namespace treecones
