#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treecones/errors.hpp"

namespace treecones {

// Directed edge of a graph on the vertex set [0:n]. The vector representation
// is e_head - e_tail with e_0 = 0, so swapping tail and head negates the edge.
struct OrientedEdge {
  int tail = 0;
  int head = 0;

  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

// Same undirected edge, low vertex as tail (the stored orientation of trees).
OrientedEdge canonical_edge(OrientedEdge e);
OrientedEdge reversed(OrientedEdge e);

// A finite simple oriented graph on [0:n]. Edge order is not significant;
// equality compares edge sets.
struct OrientedGraph {
  int n = 0;
  std::vector<OrientedEdge> edges;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b);
};

// Removes from g every edge sharing an unordered vertex pair with `removed`.
OrientedGraph edge_difference(const OrientedGraph& g,
                              const std::vector<OrientedEdge>& removed);

// A permutation s of [1:n], extended by s(0) = 0. position(v) is s^{-1}(v).
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return i == 0 ? 0 : values_[i - 1]; }
  int position(int v) const { return positions_[v]; }
  const std::vector<int>& values() const { return values_; }

  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<int> values_;     // values_[i-1] = s(i)
  std::vector<int> positions_;  // positions_[v] = s^{-1}(v), positions_[0] = 0
};

// A spanning tree of the complete graph on [0:n], stored canonically:
// every edge tail < head, edges sorted. Value type with total order so that
// enumerations and fixtures are stable.
class SpanningTree {
 public:
  SpanningTree(int n, std::vector<OrientedEdge> edges);

  int n() const { return n_; }
  const std::vector<OrientedEdge>& edges() const { return edges_; }

  friend auto operator<=>(const SpanningTree& a, const SpanningTree& b) {
    return a.edges_ <=> b.edges_;
  }
  friend bool operator==(const SpanningTree& a, const SpanningTree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<OrientedEdge> edges_;
};

// All C(n+1,2) edges (i,j), i < j, of the complete graph on [0:n].
OrientedGraph complete_graph(int n);

// All (n+1)^(n-1) spanning trees, decoded from Prufer sequences and returned
// sorted in the tree total order.
std::vector<SpanningTree> enumerate_spanning_trees(int n);

// All n! permutations of [1:n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// parent_map(T)[v] is the parent of v in the rooting of T at 0; entry 0 is -1.
std::vector<int> parent_map(const SpanningTree& tree);

// T re-oriented away from the root 0: every edge parent -> child.
OrientedGraph natural_orientation(const SpanningTree& tree);

// Number of edges whose canonical (low -> high) orientation disagrees with
// the natural one, i.e. vertices whose parent is the larger endpoint.
int distortion(const SpanningTree& tree);

// The tree whose natural orientation is the path 0 -> s(1) -> ... -> s(n).
SpanningTree path_tree(const Permutation& s);

// Inverse of path_tree on its image; nullopt when the rooted tree is no path.
std::optional<Permutation> is_path_tree(const SpanningTree& tree);

// Each edge re-oriented from the endpoint earlier under s to the later one
// (vertex 0 is earliest). reorient(complete_graph(n), s) is the s-orientation.
OrientedGraph reorient(const OrientedGraph& g, const Permutation& s);

// Number of edges of g whose orientation differs from reorient(g, s).
int mismatch(const OrientedGraph& g, const Permutation& s);

// Vertices of [0:n] without an inflow edge (isolated vertices included).
std::vector<int> sources(const OrientedGraph& g);

// Text formats. Trees: comma-separated undirected edges "0-1,1-2"; order
// insensitive, canonical orientation inferred. Permutations: digit string
// "213" or "[213]", optional leading 0 ignored; comma-separated for n >= 10.
std::string tree_to_string(const SpanningTree& tree);
SpanningTree parse_tree(int n, std::string_view text);
std::string permutation_to_string(const Permutation& s);
Permutation parse_permutation(std::string_view text);

}  // namespace treecones
