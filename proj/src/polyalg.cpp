#include "treecones/polyalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "treecones/poset.hpp"
#include "treecones/treedecomp.hpp"

namespace treecones {

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exps < b.exps;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial{std::vector<int>(nvars, 0)}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 1 || index > nvars) throw InvalidInputError("variable index out of range");
  Monomial m{std::vector<int>(nvars, 0)};
  m.exps[index - 1] = 1;
  Polynomial p(nvars);
  p.add_term(m, 1);
  return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::prev(terms_.end())->first.degree() == d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(m.exps.size()) != nvars_)
    throw InvalidInputError("monomial arity mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw InvalidInputError("polynomial arity mismatch");
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m = ma;
      for (int i = 0; i < nvars_; ++i) m.exps[i] += mb.exps[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

Polynomial edge_polynomial(int nvars, const OrientedEdge& e) {
  Polynomial p(nvars);
  if (e.head > 0) p = p + Polynomial::variable(nvars, e.head);
  if (e.tail > 0) p = p - Polynomial::variable(nvars, e.tail);
  return p;
}

Polynomial product_polynomial(const OrientedGraph& edges) {
  Polynomial p = Polynomial::constant(edges.n, 1);
  for (const OrientedEdge& e : edges.edges) p = p * edge_polynomial(edges.n, e);
  return p;
}

namespace {

// beta_i * (beta_i - 1) * ... * (beta_i - alpha_i + 1) over all i; the
// coefficient picked up by applying d^alpha to t^beta.
Rational falling_factorial(const Monomial& beta, const Monomial& alpha) {
  long f = 1;
  for (std::size_t i = 0; i < beta.exps.size(); ++i)
    for (int k = 0; k < alpha.exps[i]; ++k) f *= beta.exps[i] - k;
  return Rational(f);
}

Rational factorial_of(const Monomial& m) {
  Rational f(1);
  for (int e : m.exps)
    for (int k = 2; k <= e; ++k) f *= k;
  return f;
}

bool divides(const Monomial& alpha, const Monomial& beta) {
  for (std::size_t i = 0; i < alpha.exps.size(); ++i)
    if (alpha.exps[i] > beta.exps[i]) return false;
  return true;
}

}  // namespace

Polynomial apply_operator(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) throw InvalidInputError("operator arity mismatch");
  Polynomial out(p.nvars());
  for (const auto& [alpha, pc] : p.terms())
    for (const auto& [beta, qc] : q.terms()) {
      if (!divides(alpha, beta)) continue;
      Monomial m = beta;
      for (int i = 0; i < p.nvars(); ++i) m.exps[i] -= alpha.exps[i];
      out.add_term(m, pc * qc * falling_factorial(beta, alpha));
    }
  return out;
}

Rational pairing(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars()) throw InvalidInputError("pairing arity mismatch");
  Rational value(0);
  for (const auto& [m, pc] : p.terms()) {
    const auto it = q.terms().find(m);
    if (it != q.terms().end()) value += pc * it->second * factorial_of(m);
  }
  return value;
}

std::vector<Monomial> monomial_basis(int nvars, int degree) {
  std::vector<Monomial> basis;
  if (degree < 0) return basis;
  Monomial current{std::vector<int>(nvars, 0)};
  const auto recurse = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      current.exps[var] = remaining;
      basis.push_back(current);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current.exps[var] = e;
      self(self, var + 1, remaining - e);
    }
    current.exps[var] = 0;
  };
  recurse(recurse, 0, degree);
  std::sort(basis.begin(), basis.end(), TermOrder{});
  return basis;
}

std::size_t soc_dimension(int n) {
  const OrientedGraph g = complete_graph(n);
  const std::vector<SpanningTree> trees = enumerate_spanning_trees(n);
  const std::vector<Monomial> basis = monomial_basis(n, n * (n - 1) / 2);
  std::map<Monomial, std::size_t, TermOrder> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  RationalMatrix m(trees.size(), basis.size());
  for (std::size_t r = 0; r < trees.size(); ++r) {
    const Polynomial p = product_polynomial(edge_difference(g, trees[r].edges()));
    for (const auto& [mono, c] : p.terms()) m.at(r, index.at(mono)) = c;
  }
  return rank(std::move(m));
}

Polynomial p_basis(const Permutation& s) {
  const int n = s.size();
  const OrientedGraph gs = reorient(complete_graph(n), s);
  std::vector<OrientedEdge> path;
  path.push_back({0, s(1)});
  for (int i = 1; i < n; ++i) path.push_back({s(i), s(i + 1)});
  return product_polynomial(edge_difference(gs, path));
}

std::vector<OrientedEdge> inflow_partition(const OrientedGraph& h, int i) {
  if (i < 1 || i > h.n) throw InvalidInputError("inflow_partition: vertex out of [1:n]");
  std::vector<OrientedEdge> inflow;
  for (const OrientedEdge& e : h.edges)
    if (e.head == i) inflow.push_back(e);
  return inflow;
}

namespace {

bool is_acyclic(const OrientedGraph& h) {
  std::vector<std::vector<int>> arcs(h.n + 1);
  std::vector<int> indeg(h.n + 1, 0);
  for (const OrientedEdge& e : h.edges) {
    arcs[e.tail].push_back(e.head);
    ++indeg[e.head];
  }
  std::vector<int> ready;
  for (int v = 0; v <= h.n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++seen;
    for (int v : arcs[u])
      if (--indeg[v] == 0) ready.push_back(v);
  }
  return seen == h.n + 1;
}

bool is_connected(const OrientedGraph& h) {
  std::vector<std::vector<int>> adj(h.n + 1);
  for (const OrientedEdge& e : h.edges) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<bool> seen(h.n + 1, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == h.n + 1;
}

bool is_complete(const OrientedGraph& h) {
  if (static_cast<int>(h.edges.size()) != (h.n + 1) * h.n / 2) return false;
  std::set<std::pair<int, int>> pairs;
  for (const OrientedEdge& e : h.edges)
    pairs.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});
  return static_cast<int>(pairs.size()) == (h.n + 1) * h.n / 2;
}

// The unique topological order of a complete acyclic graph, as a permutation.
Permutation topological_permutation(const OrientedGraph& h) {
  std::vector<int> indeg(h.n + 1, 0);
  for (const OrientedEdge& e : h.edges) ++indeg[e.head];
  std::vector<int> order(h.n + 1, -1);
  for (int v = 0; v <= h.n; ++v) {
    if (indeg[v] > h.n || order[indeg[v]] != -1)
      throw InvalidInputError("graph is not a complete acyclic orientation");
    order[indeg[v]] = v;
  }
  if (order[0] != 0) throw InvalidInputError("complete orientation with source != 0");
  return Permutation(std::vector<int>(order.begin() + 1, order.end()));
}

Polynomial polynomial_from_coefficients(const std::vector<Monomial>& basis,
                                        const RationalVector& coeffs, int nvars) {
  Polynomial p(nvars);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

}  // namespace

Polynomial dual_polynomial(const OrientedGraph& h) {
  const int n = h.n;
  if (n < 1) throw InvalidInputError("dual_polynomial needs n >= 1");
  if (!is_acyclic(h)) throw InvalidInputError("dual_polynomial needs an acyclic graph");
  if (!is_connected(h)) throw InvalidInputError("dual_polynomial needs a connected graph");
  if (sources(h) != std::vector<int>{0})
    throw InvalidInputError("dual_polynomial needs single source 0");

  const int degree = static_cast<int>(h.edges.size()) - n;
  const std::vector<Monomial> basis = monomial_basis(n, degree);

  // Stack the matrices of the inflow operators, one block per vertex, each
  // mapping the degree-d component into a lower homogeneous component.
  std::vector<std::vector<RationalVector>> blocks;
  std::size_t total_rows = 0;
  for (int i = 1; i <= n; ++i) {
    const std::vector<OrientedEdge> inflow = inflow_partition(h, i);
    const int k = static_cast<int>(inflow.size());
    if (degree - k < 0) continue;  // the operator kills the whole component
    const Polynomial op = product_polynomial({n, inflow});
    const std::vector<Monomial> image_basis = monomial_basis(n, degree - k);
    std::map<Monomial, std::size_t, TermOrder> image_index;
    for (std::size_t r = 0; r < image_basis.size(); ++r) image_index.emplace(image_basis[r], r);
    std::vector<RationalVector> block(image_basis.size(),
                                      RationalVector(basis.size(), Rational(0)));
    for (std::size_t col = 0; col < basis.size(); ++col) {
      Polynomial mono(n);
      mono.add_term(basis[col], 1);
      const Polynomial image = apply_operator(op, mono);
      for (const auto& [m, c] : image.terms()) block[image_index.at(m)][col] = c;
    }
    total_rows += block.size();
    blocks.push_back(std::move(block));
  }

  RationalMatrix stacked(total_rows, basis.size());
  std::size_t row = 0;
  for (const auto& block : blocks)
    for (const RationalVector& r : block) {
      for (std::size_t c = 0; c < r.size(); ++c) stacked.at(row, c) = r[c];
      ++row;
    }

  const std::vector<RationalVector> kernel = nullspace(stacked);
  if (kernel.size() != 1)
    throw KernelDimensionError("joint kernel has dimension " +
                               std::to_string(kernel.size()) + ", expected 1");
  Polynomial m = polynomial_from_coefficients(basis, kernel.front(), n);

  if (is_complete(h)) {
    const Permutation s = topological_permutation(h);
    const Rational val = pairing(p_basis(s), m);
    if (val == 0)
      throw KernelDimensionError("kernel polynomial pairs to 0 with its basis polynomial");
    return m * (1 / val);
  }
  return m * (1 / m.terms().begin()->second);
}

DualBasis DualBasis::build(int n) {
  DualBasis basis;
  basis.n = n;
  basis.perms = all_permutations(n);
  const OrientedGraph g = complete_graph(n);
  for (const Permutation& s : basis.perms) {
    basis.dual.emplace(s, dual_polynomial(reorient(g, s)));
    basis.primal.emplace(s, p_basis(s));
  }
  return basis;
}

BiorthogonalityReport biorthogonality_check(int n) {
  const DualBasis basis = DualBasis::build(n);
  BiorthogonalityReport report;
  report.n = n;
  report.identity = true;
  report.zero_one = true;
  for (const Permutation& s : basis.perms)
    for (const Permutation& sp : basis.perms) {
      const Rational val = pairing(basis.primal.at(sp), basis.dual.at(s));
      if (val != 0 && val != 1) report.zero_one = false;
      const Rational expected = s == sp ? 1 : 0;
      if (val != expected) {
        report.identity = false;
        report.failures.push_back("<P_" + permutation_to_string(sp) + ", M_" +
                                  permutation_to_string(s) + "> = " + to_string(val));
      }
    }
  return report;
}

Rational expansion_coefficient(const SpanningTree& tree, const Permutation& s,
                               const Polynomial& dual_s) {
  if (tree.n() != s.size())
    throw InvalidInputError("expansion_coefficient: tree and permutation of different order");
  const OrientedGraph complement = edge_difference(complete_graph(tree.n()), tree.edges());
  const Rational value = pairing(product_polynomial(complement), dual_s);
  Rational closed(0);
  if (compatible(tree, path_tree(s)))
    closed = mismatch(complement, s) % 2 == 0 ? 1 : -1;
  if (value != closed)
    throw MismatchError("pairing " + to_string(value) + " != closed form " +
                        to_string(closed) + " for tree " + tree_to_string(tree) +
                        ", s = " + permutation_to_string(s));
  return value;
}

Rational expansion_coefficient(const SpanningTree& tree, const Permutation& s) {
  return expansion_coefficient(tree, s,
                               dual_polynomial(reorient(complete_graph(s.size()), s)));
}

std::map<Permutation, Rational> crosscheck(const SpanningTree& tree, const DualBasis& basis) {
  if (tree.n() != basis.n) throw InvalidInputError("crosscheck: dual basis of different order");
  const OrientedGraph g = complete_graph(tree.n());
  std::map<Permutation, Rational> out;
  for (const Permutation& s : basis.perms) {
    const Rational ec = expansion_coefficient(tree, s, basis.dual.at(s));
    if (ec == 0) continue;
    const OrientedGraph path_complement = edge_difference(g, path_tree(s).edges());
    const int sign = mismatch(path_complement, s) % 2 == 0 ? 1 : -1;
    out.emplace(s, ec * sign);
  }
  return out;
}

std::map<Permutation, Rational> crosscheck(const SpanningTree& tree) {
  return crosscheck(tree, DualBasis::build(tree.n()));
}

std::pair<bool, bool> kernel_property_check(const Permutation& s, const OrientedGraph& y,
                                            const Polynomial& dual_s) {
  const int n = s.size();
  if (y.n != n) throw InvalidInputError("kernel_property_check: mixed n");
  for (const OrientedEdge& e : y.edges)
    if (e.tail >= e.head)
      throw InvalidInputError("kernel_property_check: Y must be canonically oriented");
  const bool lhs = apply_operator(product_polynomial(y), dual_s).is_zero();
  const OrientedGraph rest = reorient(edge_difference(complete_graph(n), y.edges), s);
  const bool rhs = sources(rest) != std::vector<int>{0};
  return {lhs, rhs};
}

std::pair<bool, bool> kernel_property_check(const Permutation& s, const OrientedGraph& y) {
  return kernel_property_check(s, y,
                               dual_polynomial(reorient(complete_graph(s.size()), s)));
}

namespace {

// deriv == ratio * reference for one nonzero ratio?
bool proportional(const Polynomial& deriv, const Polynomial& reference, Rational& ratio) {
  if (deriv.is_zero() || reference.is_zero()) return false;
  if (deriv.terms().size() != reference.terms().size()) return false;
  ratio = 0;
  for (const auto& [m, c] : reference.terms()) {
    const auto it = deriv.terms().find(m);
    if (it == deriv.terms().end()) return false;
    const Rational r = it->second / c;
    if (ratio == 0)
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return true;
}

}  // namespace

RecursionReport recursion_check(const OrientedGraph& h, const OrientedEdge& x) {
  const auto it = std::find(h.edges.begin(), h.edges.end(), x);
  if (it == h.edges.end()) throw InvalidInputError("recursion_check: edge not in graph");
  const Polynomial m = dual_polynomial(h);
  const Polynomial deriv = apply_operator(edge_polynomial(h.n, x), m);

  RecursionReport report;
  report.sole_inflow = inflow_partition(h, x.head).size() == 1;
  if (report.sole_inflow) {
    report.pass = deriv.is_zero();
    return report;
  }
  OrientedGraph rest = h;
  rest.edges.erase(rest.edges.begin() + (it - h.edges.begin()));
  const Polynomial m_rest = dual_polynomial(rest);
  report.pass = proportional(deriv, m_rest, report.ratio) && report.ratio != 0;
  return report;
}

std::string polynomial_to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    os << to_string(abs(c));
    bool constant = true;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      os << (constant ? "*" : " ");
      constant = false;
      os << 't' << i + 1;
      if (m.exps[i] > 1) os << '^' << m.exps[i];
    }
  }
  return os.str();
}

}  // namespace treecones
