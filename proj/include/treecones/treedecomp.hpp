#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "treecones/graph.hpp"
#include "treecones/rational.hpp"

namespace treecones {

struct TreeTerm {
  SpanningTree tree;
  Rational weight;
};

// An expansion sum_s coefficients[s] * chi_s of a cone indicator (or of a
// rational combination of cone indicators). Only nonzero coefficients are
// stored; map order is lexicographic on permutations.
struct Decomposition {
  int n = 0;
  std::vector<TreeTerm> target;
  std::map<Permutation, Rational> coefficients;
};

// The closed-form coefficient of chi_s in chi_T:
// (-1)^(distortion(T) + distortion(path_tree(s))) when T and T_s are
// compatible, else 0. Always in {-1, 0, +1}.
int coefficient(const SpanningTree& tree, const Permutation& s);

Decomposition decompose(const SpanningTree& tree);

// Linear extension of decompose over weighted tree combinations.
Decomposition decompose_combination(const std::map<SpanningTree, Rational>& weights);

// 0 for permutations outside the support.
Rational coefficient_of(const Decomposition& d, const Permutation& s);

nlohmann::json decomposition_to_json(const Decomposition& d);

}  // namespace treecones
