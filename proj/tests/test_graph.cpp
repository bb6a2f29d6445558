#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "treecones/graph.hpp"

using namespace treecones;

namespace {

long tree_count(int n) {
  long c = 1;
  for (int i = 0; i < n - 1; ++i) c *= n + 1;
  return c;
}


// Independent oracle: position pairs out of order in the value sequence.
int inversions(const Permutation& s) {
  int count = 0;
  for (int a = 1; a <= s.size(); ++a)
    for (int b = a + 1; b <= s.size(); ++b)
      if (s(a) > s(b)) ++count;
  return count;
}

bool acyclic_with_single_source_zero(const OrientedGraph& g) {
  std::vector<int> indeg(g.n + 1, 0);
  std::vector<std::vector<int>> arcs(g.n + 1);
  for (const OrientedEdge& e : g.edges) {
    ++indeg[e.head];
    arcs[e.tail].push_back(e.head);
  }
  if (sources(g) != std::vector<int>{0}) return false;
  std::vector<int> ready{0};
  int seen = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++seen;
    for (int v : arcs[u])
      if (--indeg[v] == 0) ready.push_back(v);
  }
  return seen == g.n + 1;
}

}  // namespace

TEST_CASE("complete graph edges") {
  CHECK(complete_graph(1).edges == std::vector<OrientedEdge>{{0, 1}});
  CHECK(complete_graph(2).edges == std::vector<OrientedEdge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(complete_graph(3).edges.size() == 6);
  CHECK_THROWS_AS(complete_graph(0), InvalidInputError);
}

TEST_CASE("spanning tree enumeration counts") {
  for (int n = 1; n <= 5; ++n) {
    const auto trees = enumerate_spanning_trees(n);
    CHECK(static_cast<long>(trees.size()) == tree_count(n));
    CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());  // distinct
    CHECK(std::is_sorted(trees.begin(), trees.end()));
  }
}

TEST_CASE("n=2 enumeration matches exhaustive subset oracle") {
  // Oracle: try all 2-subsets of the 3 edges of K_2 and keep the valid trees.
  const auto edges = complete_graph(2).edges;
  std::set<SpanningTree> expected;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      try {
        expected.insert(SpanningTree(2, {edges[i], edges[j]}));
      } catch (const InvalidInputError&) {
      }
    }
  const auto trees = enumerate_spanning_trees(2);
  CHECK(std::set<SpanningTree>(trees.begin(), trees.end()) == expected);
  CHECK(expected.size() == 3);
}

TEST_CASE("spanning tree validation") {
  CHECK_THROWS_AS(SpanningTree(2, {{0, 1}, {1, 0}}), InvalidInputError);  // duplicate pair
  CHECK_THROWS_AS(SpanningTree(2, {{0, 1}}), InvalidInputError);          // too few
  CHECK_THROWS_AS(SpanningTree(3, {{0, 1}, {1, 2}, {0, 2}}), InvalidInputError);  // cycle
  CHECK_THROWS_AS(SpanningTree(2, {{0, 1}, {1, 3}}), InvalidInputError);  // out of range
  const SpanningTree t(2, {{2, 1}, {1, 0}});  // canonicalized
  CHECK(t.edges() == std::vector<OrientedEdge>{{0, 1}, {1, 2}});
}

TEST_CASE("natural orientation") {
  const SpanningTree star(3, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(natural_orientation(star) == OrientedGraph{3, {{0, 1}, {0, 2}, {0, 3}}});
  const SpanningTree v(2, {{0, 2}, {1, 2}});
  CHECK(natural_orientation(v) == OrientedGraph{2, {{0, 2}, {2, 1}}});
  const SpanningTree t(3, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(natural_orientation(t) == OrientedGraph{3, {{0, 1}, {1, 2}, {1, 3}}});
}

TEST_CASE("distortion") {
  CHECK(distortion(SpanningTree(3, {{0, 1}, {0, 2}, {0, 3}})) == 0);
  CHECK(distortion(path_tree(parse_permutation("21"))) == 1);
  CHECK(distortion(path_tree(parse_permutation("321"))) == 2);
}

TEST_CASE("path trees") {
  CHECK(path_tree(parse_permutation("12")) == SpanningTree(2, {{0, 1}, {1, 2}}));
  CHECK(path_tree(parse_permutation("4123")) ==
        SpanningTree(4, {{0, 4}, {1, 4}, {1, 2}, {2, 3}}));
  for (int n = 1; n <= 4; ++n) {
    const Permutation id = Permutation::identity(n);
    CHECK(distortion(path_tree(id)) == 0);
    for (const Permutation& s : all_permutations(n)) {
      // natural orientation is the directed path 0 -> s(1) -> ... -> s(n)
      OrientedGraph expected{n, {}};
      expected.edges.push_back({0, s(1)});
      for (int i = 1; i < n; ++i) expected.edges.push_back({s(i), s(i + 1)});
      CHECK(natural_orientation(path_tree(s)) == expected);
    }
  }
}

TEST_CASE("is_path_tree") {
  for (int n = 1; n <= 4; ++n)
    for (const Permutation& s : all_permutations(n)) {
      const auto back = is_path_tree(path_tree(s));
      REQUIRE(back.has_value());
      CHECK(*back == s);
    }
  CHECK(!is_path_tree(SpanningTree(2, {{0, 1}, {0, 2}})).has_value());
  int path_count = 0;
  for (const SpanningTree& t : enumerate_spanning_trees(3))
    if (is_path_tree(t)) ++path_count;
  CHECK(path_count == 6);
}

TEST_CASE("reorient") {
  const Permutation s21 = parse_permutation("21");
  CHECK(reorient(complete_graph(2), Permutation::identity(2)) == complete_graph(2));
  CHECK(reorient(OrientedGraph{2, path_tree(s21).edges()}, s21) ==
        OrientedGraph{2, {{0, 2}, {2, 1}}});
  CHECK(reorient(complete_graph(2), s21) == OrientedGraph{2, {{0, 1}, {0, 2}, {2, 1}}});
  for (int n = 2; n <= 4; ++n)
    for (const Permutation& s : all_permutations(n))
      CHECK(acyclic_with_single_source_zero(reorient(complete_graph(n), s)));
}

TEST_CASE("mismatch") {
  for (int n = 1; n <= 4; ++n) {
    const OrientedGraph g = complete_graph(n);
    CHECK(mismatch(g, Permutation::identity(n)) == 0);
    for (const Permutation& s : all_permutations(n)) {
      CHECK(mismatch(g, s) == inversions(s));
      const SpanningTree ts = path_tree(s);
      CHECK(mismatch(OrientedGraph{n, ts.edges()}, s) == distortion(ts));
    }
  }
}

TEST_CASE("mismatch adds over disjoint edge sets") {
  std::mt19937 rng(7);
  const OrientedGraph g = complete_graph(4);
  const auto perms = all_permutations(4);
  for (int trial = 0; trial < 50; ++trial) {
    OrientedGraph left{4, {}}, right{4, {}};
    for (const OrientedEdge& e : g.edges) (rng() % 2 ? left : right).edges.push_back(e);
    const Permutation& s = perms[rng() % perms.size()];
    OrientedGraph both{4, left.edges};
    both.edges.insert(both.edges.end(), right.edges.begin(), right.edges.end());
    CHECK(mismatch(both, s) == mismatch(left, s) + mismatch(right, s));
  }
}

TEST_CASE("sources") {
  for (const SpanningTree& t : enumerate_spanning_trees(3))
    CHECK(sources(natural_orientation(t)) == std::vector<int>{0});
  CHECK(sources(OrientedGraph{2, {{0, 1}, {2, 1}}}) == std::vector<int>{0, 2});
  CHECK(sources(OrientedGraph{3, {{0, 1}}}) == std::vector<int>{0, 2, 3});  // isolated too
}

TEST_CASE("every natural orientation has in-degree one away from the root") {
  for (int n = 1; n <= 4; ++n)
    for (const SpanningTree& t : enumerate_spanning_trees(n)) {
      std::vector<int> indeg(n + 1, 0);
      for (const OrientedEdge& e : natural_orientation(t).edges) ++indeg[e.head];
      CHECK(indeg[0] == 0);
      for (int v = 1; v <= n; ++v) CHECK(indeg[v] == 1);
    }
}

TEST_CASE("tree text format") {
  const SpanningTree t = parse_tree(3, "0-1,1-2,1-3");
  CHECK(tree_to_string(t) == "0-1,1-2,1-3");
  CHECK(parse_tree(3, "1-2,3-1,1-0") == t);  // order and orientation insensitive
  CHECK_THROWS_AS(parse_tree(3, "0-1,1-2"), InvalidInputError);
  CHECK_THROWS_AS(parse_tree(3, "0-1,banana,1-3"), FormatError);
  CHECK_THROWS_AS(parse_tree(3, ""), FormatError);
  CHECK_THROWS_AS(parse_tree(2, "0-1,0-1"), InvalidInputError);
}

TEST_CASE("permutation text format") {
  CHECK(parse_permutation("4123") == Permutation({4, 1, 2, 3}));
  CHECK(parse_permutation("[4123]") == Permutation({4, 1, 2, 3}));
  CHECK(parse_permutation("04123") == Permutation({4, 1, 2, 3}));  // leading 0 ignored
  CHECK(parse_permutation("10,1,2,3,4,5,6,7,8,9") ==
        Permutation({10, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  CHECK(parse_permutation("0,2,1") == Permutation({2, 1}));
  CHECK(permutation_to_string(Permutation({2, 1, 3})) == "213");
  CHECK(permutation_to_string(Permutation({10, 1, 2, 3, 4, 5, 6, 7, 8, 9})) ==
        "10,1,2,3,4,5,6,7,8,9");
  CHECK_THROWS_AS(parse_permutation("1x2"), FormatError);
  CHECK_THROWS_AS(parse_permutation("122"), InvalidInputError);
  CHECK_THROWS_AS(parse_permutation("13"), InvalidInputError);
  CHECK_THROWS_AS(parse_permutation(""), FormatError);
}

TEST_CASE("permutation positions") {
  const Permutation s = parse_permutation("4123");
  CHECK(s(0) == 0);
  CHECK(s(1) == 4);
  CHECK(s.position(0) == 0);
  CHECK(s.position(4) == 1);
  CHECK(s.position(3) == 4);
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(3).front() == Permutation::identity(3));
}
