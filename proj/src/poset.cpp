#include "treecones/poset.hpp"

#include <algorithm>

namespace treecones {

TreePartialOrder::TreePartialOrder(const SpanningTree& tree)
    : n_(tree.n()), parent_(parent_map(tree)) {}

bool TreePartialOrder::precedes(int i, int j) const {
  if (i == j || j == 0) return false;
  for (int v = parent_[j]; v != -1; v = v == 0 ? -1 : parent_[v])
    if (v == i) return true;
  return false;
}

TreePartialOrder tree_partial_order(const SpanningTree& tree) {
  return TreePartialOrder(tree);
}

bool compatible(const SpanningTree& a, const SpanningTree& b) {
  if (a.n() != b.n()) throw InvalidInputError("compatible: trees of different order");
  const int n = a.n();
  // Cover arcs parent -> child over [1:n] from both trees; arcs out of the
  // root impose nothing. A common linear extension exists iff this is acyclic.
  std::vector<std::vector<int>> arcs(n + 1);
  std::vector<int> indeg(n + 1, 0);
  for (const SpanningTree* t : {&a, &b}) {
    const std::vector<int> parent = parent_map(*t);
    for (int v = 1; v <= n; ++v)
      if (parent[v] != 0) {
        arcs[parent[v]].push_back(v);
        ++indeg[v];
      }
  }
  std::vector<int> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int placed = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++placed;
    for (int v : arcs[u])
      if (--indeg[v] == 0) ready.push_back(v);
  }
  return placed == n;
}

namespace {

void extend(const std::vector<int>& parent, std::vector<bool>& placed,
            std::vector<int>& prefix, int n, std::vector<Permutation>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(Permutation(prefix));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (placed[v]) continue;
    if (parent[v] != 0 && !placed[parent[v]]) continue;
    placed[v] = true;
    prefix.push_back(v);
    extend(parent, placed, prefix, n, out);
    prefix.pop_back();
    placed[v] = false;
  }
}

}  // namespace

std::vector<Permutation> linear_extensions(const SpanningTree& tree) {
  const int n = tree.n();
  const std::vector<int> parent = parent_map(tree);
  std::vector<bool> placed(n + 1, false);
  std::vector<int> prefix;
  std::vector<Permutation> out;
  extend(parent, placed, prefix, n, out);
  return out;
}

}  // namespace treecones
