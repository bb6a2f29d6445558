#include "treecones/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace treecones {

namespace {

std::pair<int, int> unordered_pair(const OrientedEdge& e) {
  return {std::min(e.tail, e.head), std::max(e.tail, e.head)};
}

void check_vertex_range(int n, const OrientedEdge& e) {
  if (e.tail < 0 || e.tail > n || e.head < 0 || e.head > n)
    throw InvalidInputError("edge endpoint outside [0:" + std::to_string(n) + "]");
  if (e.tail == e.head) throw InvalidInputError("loop edge");
}

std::vector<OrientedEdge> sorted_edges(std::vector<OrientedEdge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

OrientedEdge canonical_edge(OrientedEdge e) {
  if (e.tail > e.head) std::swap(e.tail, e.head);
  return e;
}

OrientedEdge reversed(OrientedEdge e) { return {e.head, e.tail}; }

bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
  return a.n == b.n && sorted_edges(a.edges) == sorted_edges(b.edges);
}

OrientedGraph edge_difference(const OrientedGraph& g,
                              const std::vector<OrientedEdge>& removed) {
  std::set<std::pair<int, int>> gone;
  for (const OrientedEdge& e : removed) gone.insert(unordered_pair(e));
  OrientedGraph out{g.n, {}};
  for (const OrientedEdge& e : g.edges)
    if (!gone.count(unordered_pair(e))) out.edges.push_back(e);
  return out;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n < 1) throw InvalidInputError("empty permutation");
  positions_.assign(n + 1, -1);
  positions_[0] = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = values_[i - 1];
    if (v < 1 || v > n) throw InvalidInputError("permutation value out of range");
    if (positions_[v] != -1) throw InvalidInputError("repeated permutation value");
    positions_[v] = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> vals(n);
  std::iota(vals.begin(), vals.end(), 1);
  return Permutation(std::move(vals));
}

SpanningTree::SpanningTree(int n, std::vector<OrientedEdge> edges) : n_(n) {
  if (n < 1) throw InvalidInputError("spanning tree needs n >= 1");
  if (static_cast<int>(edges.size()) != n)
    throw InvalidInputError("spanning tree on [0:" + std::to_string(n) + "] needs exactly " +
                            std::to_string(n) + " edges");
  std::set<std::pair<int, int>> seen;
  for (OrientedEdge& e : edges) {
    check_vertex_range(n, e);
    e = canonical_edge(e);
    if (!seen.insert(unordered_pair(e)).second)
      throw InvalidInputError("duplicate edge in tree");
  }
  // n distinct edges on n+1 vertices form a tree iff they connect everything.
  std::vector<int> comp(n + 1);
  std::iota(comp.begin(), comp.end(), 0);
  const auto find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (const OrientedEdge& e : edges) {
    const int a = find(e.tail), b = find(e.head);
    if (a == b) throw InvalidInputError("edges contain a cycle");
    comp[a] = b;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

OrientedGraph complete_graph(int n) {
  if (n < 1) throw InvalidInputError("complete_graph needs n >= 1");
  OrientedGraph g{n, {}};
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.edges.push_back({i, j});
  return g;
}

std::vector<SpanningTree> enumerate_spanning_trees(int n) {
  if (n < 1) throw InvalidInputError("enumerate_spanning_trees needs n >= 1");
  std::vector<SpanningTree> trees;
  std::vector<int> seq(n >= 2 ? n - 1 : 0, 0);
  for (;;) {
    // Prufer decode of seq over vertex labels [0:n].
    std::vector<int> degree(n + 1, 1);
    for (int a : seq) ++degree[a];
    std::set<int> leaves;
    for (int v = 0; v <= n; ++v)
      if (degree[v] == 1) leaves.insert(v);
    std::vector<OrientedEdge> edges;
    for (int a : seq) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({leaf, a});
      if (--degree[a] == 1) leaves.insert(a);
    }
    const int u = *leaves.begin(), v = *std::next(leaves.begin());
    edges.push_back({u, v});
    trees.emplace_back(n, std::move(edges));

    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[i] == n) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> vals(n);
  std::iota(vals.begin(), vals.end(), 1);
  std::vector<Permutation> perms;
  do {
    perms.push_back(Permutation(vals));
  } while (std::next_permutation(vals.begin(), vals.end()));
  return perms;
}

std::vector<int> parent_map(const SpanningTree& tree) {
  const int n = tree.n();
  std::vector<std::vector<int>> adj(n + 1);
  for (const OrientedEdge& e : tree.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<int> parent(n + 1, -1);
  std::vector<int> stack{0};
  std::vector<bool> seen(n + 1, false);
  seen[0] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        stack.push_back(v);
      }
  }
  return parent;
}

OrientedGraph natural_orientation(const SpanningTree& tree) {
  const std::vector<int> parent = parent_map(tree);
  OrientedGraph out{tree.n(), {}};
  for (int v = 1; v <= tree.n(); ++v) out.edges.push_back({parent[v], v});
  return out;
}

int distortion(const SpanningTree& tree) {
  const std::vector<int> parent = parent_map(tree);
  int count = 0;
  for (int v = 1; v <= tree.n(); ++v)
    if (parent[v] > v) ++count;
  return count;
}

SpanningTree path_tree(const Permutation& s) {
  const int n = s.size();
  std::vector<OrientedEdge> edges;
  edges.push_back({0, s(1)});
  for (int i = 1; i < n; ++i) edges.push_back({s(i), s(i + 1)});
  return SpanningTree(n, std::move(edges));
}

std::optional<Permutation> is_path_tree(const SpanningTree& tree) {
  const int n = tree.n();
  const std::vector<int> parent = parent_map(tree);
  std::vector<int> child(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    const int p = parent[v];
    if (child[p] != -1) return std::nullopt;  // two children somewhere
    child[p] = v;
  }
  std::vector<int> values;
  for (int u = child[0]; u != -1; u = child[u]) values.push_back(u);
  if (static_cast<int>(values.size()) != n) return std::nullopt;
  return Permutation(std::move(values));
}

OrientedGraph reorient(const OrientedGraph& g, const Permutation& s) {
  if (g.n != s.size())
    throw InvalidInputError("reorient: permutation size differs from graph order");
  OrientedGraph out{g.n, {}};
  for (OrientedEdge e : g.edges) {
    if (s.position(e.tail) > s.position(e.head)) e = reversed(e);
    out.edges.push_back(e);
  }
  return out;
}

int mismatch(const OrientedGraph& g, const Permutation& s) {
  if (g.n != s.size())
    throw InvalidInputError("mismatch: permutation size differs from graph order");
  int count = 0;
  for (const OrientedEdge& e : g.edges)
    if (s.position(e.tail) > s.position(e.head)) ++count;
  return count;
}

std::vector<int> sources(const OrientedGraph& g) {
  std::vector<bool> inflow(g.n + 1, false);
  for (const OrientedEdge& e : g.edges) inflow[e.head] = true;
  std::vector<int> out;
  for (int v = 0; v <= g.n; ++v)
    if (!inflow[v]) out.push_back(v);
  return out;
}

std::string tree_to_string(const SpanningTree& tree) {
  std::ostringstream os;
  bool first = true;
  for (const OrientedEdge& e : tree.edges()) {
    if (!first) os << ',';
    first = false;
    os << e.tail << '-' << e.head;
  }
  return os.str();
}

namespace {

int parse_vertex(std::string_view token) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw FormatError("bad vertex number '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

}  // namespace

SpanningTree parse_tree(int n, std::string_view text) {
  if (text.empty()) throw FormatError("empty tree description");
  std::vector<OrientedEdge> edges;
  for (std::string_view part : split(text, ',')) {
    const std::size_t dash = part.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 == part.size())
      throw FormatError("edge must look like 'a-b', got '" + std::string(part) + "'");
    edges.push_back({parse_vertex(part.substr(0, dash)), parse_vertex(part.substr(dash + 1))});
  }
  return SpanningTree(n, std::move(edges));
}

std::string permutation_to_string(const Permutation& s) {
  std::ostringstream os;
  const bool wide = s.size() >= 10;
  for (int i = 1; i <= s.size(); ++i) {
    if (wide && i > 1) os << ',';
    os << s(i);
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  if (text.empty()) throw FormatError("empty permutation");
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    for (std::string_view part : split(text, ',')) values.push_back(parse_vertex(part));
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw FormatError("permutation must be digits, got '" + std::string(text) + "'");
      values.push_back(c - '0');
    }
  }
  if (!values.empty() && values.front() == 0) values.erase(values.begin());
  return Permutation(std::move(values));
}

}  // namespace treecones
