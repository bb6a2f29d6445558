#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treecones/poset.hpp"
#include "treecones/treedecomp.hpp"

using namespace treecones;

namespace {

std::map<Permutation, Rational> coeff_map(
    std::initializer_list<std::pair<const char*, int>> entries) {
  std::map<Permutation, Rational> m;
  for (const auto& [perm, c] : entries) m.emplace(parse_permutation(perm), Rational(c));
  return m;
}

}  // namespace

TEST_CASE("n=2 positive quadrant") {
  const SpanningTree t(2, {{0, 1}, {0, 2}});
  CHECK(coefficient(t, parse_permutation("12")) == 1);
  CHECK(coefficient(t, parse_permutation("21")) == -1);
  CHECK(decompose(t).coefficients == coeff_map({{"12", 1}, {"21", -1}}));
}

TEST_CASE("n=3 fixtures") {
  // two extensions, opposite signs
  CHECK(decompose(parse_tree(3, "0-1,1-2,1-3")).coefficients ==
        coeff_map({{"123", 1}, {"132", -1}}));
  // two extensions, equal signs: the sum of the two path cones
  const SpanningTree fork = parse_tree(3, "0-2,1-2,2-3");
  CHECK(coefficient(fork, parse_permutation("213")) == 1);
  CHECK(coefficient(fork, parse_permutation("231")) == 1);
  CHECK(decompose(fork).coefficients == coeff_map({{"213", 1}, {"231", 1}}));
  // three extensions
  CHECK(decompose(parse_tree(3, "0-1,1-2,0-3")).coefficients ==
        coeff_map({{"123", 1}, {"132", -1}, {"312", -1}}));
  // the positive octant: signs ordered by lexicographic permutation
  CHECK(decompose(parse_tree(3, "0-1,0-2,0-3")).coefficients ==
        coeff_map({{"123", 1}, {"132", -1}, {"213", -1}, {"231", -1}, {"312", -1}, {"321", 1}}));
}

TEST_CASE("star expands over every permutation with distortion signs") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<OrientedEdge> spokes;
    for (int v = 1; v <= n; ++v) spokes.push_back({0, v});
    const Decomposition d = decompose(SpanningTree(n, spokes));
    const auto perms = all_permutations(n);
    REQUIRE(d.coefficients.size() == perms.size());
    for (const Permutation& s : perms)
      CHECK(coefficient_of(d, s) == (distortion(path_tree(s)) % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("path trees are unit vectors in their own basis") {
  for (int n = 1; n <= 4; ++n)
    for (const Permutation& s : all_permutations(n)) {
      const Decomposition d = decompose(path_tree(s));
      REQUIRE(d.coefficients.size() == 1);
      CHECK(coefficient_of(d, s) == 1);
      for (const Permutation& sp : all_permutations(n))
        CHECK(coefficient(path_tree(s), sp) == (s == sp ? 1 : 0));
    }
}

TEST_CASE("support is exactly the compatible permutations") {
  for (int n = 1; n <= 4; ++n)
    for (const SpanningTree& t : enumerate_spanning_trees(n))
      for (const Permutation& s : all_permutations(n))
        CHECK((coefficient(t, s) != 0) == compatible(t, path_tree(s)));
}

TEST_CASE("coefficients of equal-parity permutations never differ in sign") {
  for (int n = 2; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const SpanningTree& t : enumerate_spanning_trees(n))
      for (const Permutation& s : perms)
        for (const Permutation& sp : perms) {
          const int prod = coefficient(t, s) * coefficient(t, sp);
          const bool same_parity =
              distortion(path_tree(s)) % 2 == distortion(path_tree(sp)) % 2;
          CHECK((same_parity ? prod >= 0 : prod <= 0));
        }
  }
}

TEST_CASE("combinations") {
  const SpanningTree star(2, {{0, 1}, {0, 2}});
  const SpanningTree path12 = path_tree(parse_permutation("12"));

  const Decomposition single = decompose_combination({{star, Rational(1)}});
  CHECK(single.coefficients == decompose(star).coefficients);

  const Decomposition zero = decompose_combination({{star, Rational(0)}});
  CHECK(zero.coefficients.empty());

  const Decomposition diff =
      decompose_combination({{star, Rational(1)}, {path12, Rational(-1)}});
  CHECK(diff.coefficients == coeff_map({{"21", -1}}));

  const Decomposition scaled = decompose_combination({{star, make_rational(1, 2)}});
  CHECK(coefficient_of(scaled, parse_permutation("12")) == make_rational(1, 2));
  CHECK(coefficient_of(scaled, parse_permutation("21")) == make_rational(-1, 2));

  CHECK_THROWS_AS(
      decompose_combination({{star, Rational(1)}, {SpanningTree(3, {{0, 1}, {0, 2}, {0, 3}}), Rational(1)}}),
      InvalidInputError);
  CHECK_THROWS_AS(decompose_combination({}), InvalidInputError);
}

TEST_CASE("decomposition json") {
  const Decomposition d = decompose(parse_tree(3, "0-1,1-2,0-3"));
  CHECK(decomposition_to_json(d).dump() ==
        R"({"coefficients":[{"c":"1","perm":"123"},{"c":"-1","perm":"132"},{"c":"-1","perm":"312"}],"n":3,"target":{"tree":"0-1,0-3,1-2"}})");

  const SpanningTree star(2, {{0, 1}, {0, 2}});
  const Decomposition combo =
      decompose_combination({{star, make_rational(1, 2)}, {path_tree(parse_permutation("12")), Rational(-1)}});
  const auto j = decomposition_to_json(combo);
  CHECK(j["target"]["combination"].size() == 2);
  CHECK(j["target"]["combination"][0]["weight"] == "1/2");
}
