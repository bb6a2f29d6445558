#include "treecones/treedecomp.hpp"

#include "treecones/poset.hpp"

namespace treecones {

int coefficient(const SpanningTree& tree, const Permutation& s) {
  if (tree.n() != s.size())
    throw InvalidInputError("coefficient: tree and permutation of different order");
  const SpanningTree ts = path_tree(s);
  if (!compatible(tree, ts)) return 0;
  return (distortion(tree) + distortion(ts)) % 2 == 0 ? 1 : -1;
}

Decomposition decompose(const SpanningTree& tree) {
  Decomposition d;
  d.n = tree.n();
  d.target.push_back({tree, Rational(1)});
  for (const Permutation& s : linear_extensions(tree))
    d.coefficients.emplace(s, Rational(coefficient(tree, s)));
  return d;
}

Decomposition decompose_combination(const std::map<SpanningTree, Rational>& weights) {
  if (weights.empty()) throw InvalidInputError("empty combination");
  Decomposition d;
  d.n = weights.begin()->first.n();
  for (const auto& [tree, weight] : weights) {
    if (tree.n() != d.n) throw InvalidInputError("combination mixes different n");
    d.target.push_back({tree, weight});
    if (weight == 0) continue;
    for (const Permutation& s : linear_extensions(tree)) {
      auto [it, inserted] = d.coefficients.emplace(s, 0);
      it->second += weight * coefficient(tree, s);
      if (it->second == 0) d.coefficients.erase(it);
    }
  }
  return d;
}

Rational coefficient_of(const Decomposition& d, const Permutation& s) {
  const auto it = d.coefficients.find(s);
  return it == d.coefficients.end() ? Rational(0) : it->second;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
  nlohmann::json j;
  j["n"] = d.n;
  if (d.target.size() == 1 && d.target.front().weight == 1) {
    j["target"] = {{"tree", tree_to_string(d.target.front().tree)}};
  } else {
    nlohmann::json terms = nlohmann::json::array();
    for (const TreeTerm& t : d.target)
      terms.push_back({{"tree", tree_to_string(t.tree)}, {"weight", to_string(t.weight)}});
    j["target"] = {{"combination", terms}};
  }
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [s, c] : d.coefficients)
    coeffs.push_back({{"perm", permutation_to_string(s)}, {"c", to_string(c)}});
  j["coefficients"] = coeffs;
  return j;
}

}  // namespace treecones
