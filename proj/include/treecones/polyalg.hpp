#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "treecones/conespace.hpp"
#include "treecones/graph.hpp"
#include "treecones/rational.hpp"

namespace treecones {

struct Monomial {
  std::vector<int> exps;  // exponent of t(1), ..., t(n)

  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: higher total degree first, then lexicographically
// ascending exponent vectors. Iterating a polynomial yields print order.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over the rationals in t(1), ..., t(n).
// Vertex 0 has no variable. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);  // t(index), 1-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Largest term degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_;
  TermMap terms_;
};

// t(head) - t(tail), with t(0) dropped: an edge out of 0 gives one term.
Polynomial edge_polynomial(int nvars, const OrientedEdge& e);

// Product of edge polynomials over the given edge set (1 for the empty set);
// homogeneous of degree #edges.
Polynomial product_polynomial(const OrientedGraph& edges);

// p(D) applied to q: every monomial of p acts as the matching mixed partial.
Polynomial apply_operator(const Polynomial& p, const Polynomial& q);

// <p, q> = p(D)q evaluated at 0. Equals sum over shared monomials of
// p_a * q_a * a!, which is how it is computed.
Rational pairing(const Polynomial& p, const Polynomial& q);

// All degree-d monomials in nvars variables, in canonical term order.
std::vector<Monomial> monomial_basis(int nvars, int degree);

// Exact rank of {p_{G\T} : T spanning} in the degree-C(n,2) monomial basis.
std::size_t soc_dimension(int n);

// P_s = p_{G^s minus the path 0 -> s(1) -> ... -> s(n)}.
Polynomial p_basis(const Permutation& s);

// Edges of h whose head is i.
std::vector<OrientedEdge> inflow_partition(const OrientedGraph& h, int i);

// The unique-up-to-scale homogeneous polynomial of degree #h - n annihilated
// by every inflow-partition operator of h (h acyclic, connected, single
// source 0). For a complete h (= G^s) it is scaled so <P_s, M_s> = 1;
// otherwise the leading coefficient is set to +1.
Polynomial dual_polynomial(const OrientedGraph& h);

// All M_s and P_s of one order n, computed once and shared by the sweeps.
struct DualBasis {
  int n = 0;
  std::vector<Permutation> perms;
  std::map<Permutation, Polynomial> dual;    // M_s
  std::map<Permutation, Polynomial> primal;  // P_s

  static DualBasis build(int n);
};

struct BiorthogonalityReport {
  int n = 0;
  bool identity = false;
  bool zero_one = false;
  std::vector<std::string> failures;

  bool pass() const { return identity && zero_one; }
};

// Checks [<P_{s'}, M_s>] == Id over all pairs.
BiorthogonalityReport biorthogonality_check(int n);

// <p_{G\T}, M_s>, asserted against the closed form
// (-1)^mismatch(G\T, s) * C(T, T_s); MismatchError if they ever disagree.
Rational expansion_coefficient(const SpanningTree& tree, const Permutation& s);
Rational expansion_coefficient(const SpanningTree& tree, const Permutation& s,
                               const Polynomial& dual_s);

// The symbolic route to the decomposition of chi_T: converts the P_s
// expansion back to the chi_s basis via the sign (-1)^mismatch(G\T_s, s).
// Must equal decompose(tree).
std::map<Permutation, Rational> crosscheck(const SpanningTree& tree);
std::map<Permutation, Rational> crosscheck(const SpanningTree& tree, const DualBasis& basis);

// (p_Y(D)M_s == 0, the graph (G\Y)^s has a source other than 0);
// the two components must always be equal.
std::pair<bool, bool> kernel_property_check(const Permutation& s, const OrientedGraph& y);
std::pair<bool, bool> kernel_property_check(const Permutation& s, const OrientedGraph& y,
                                            const Polynomial& dual_s);

struct RecursionReport {
  bool sole_inflow = false;  // x was the only inflow edge of its head
  bool pass = false;
  Rational ratio;  // deriv = ratio * M_{h minus x} in the non-sole case
};

// Differentiating M_h along an edge x of h either kills it (x was the sole
// inflow of its head) or lands on a nonzero multiple of the dual of h minus x.
RecursionReport recursion_check(const OrientedGraph& h, const OrientedEdge& x);

// Canonical text form, e.g. "1*t2 - 1*t1"; "0" for the zero polynomial.
std::string polynomial_to_string(const Polynomial& p);

}  // namespace treecones
