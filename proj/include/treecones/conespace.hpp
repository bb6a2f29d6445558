#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "treecones/graph.hpp"
#include "treecones/rational.hpp"
#include "treecones/treedecomp.hpp"

namespace treecones {

using RationalVector = std::vector<Rational>;

// Dense exact matrix. Elimination uses first-nonzero pivoting, which is exact
// over the rationals and keeps every operation deterministic.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix m);

// Unique solution of a nonsingular square system; SingularMatrixError otherwise.
RationalVector solve_square(const RationalMatrix& a, const RationalVector& b);

RationalMatrix inverse(const RationalMatrix& a);

// Basis of the right kernel, one vector per free column of the RREF,
// in ascending free-column order.
std::vector<RationalVector> nullspace(const RationalMatrix& a);

// The n x n matrix whose columns are the edge vectors of the tree
// (column order follows the sorted edge list).
RationalMatrix tree_matrix(const SpanningTree& tree);

// Coordinates of x in the edge-vector basis of the tree. A spanning tree's
// edge vectors always form a basis, so this never fails on valid trees.
RationalVector tree_coordinates(const SpanningTree& tree, const RationalVector& x);

// chi_T(x): 1 if every tree coordinate is strictly positive, 0 if some is
// negative. A zero coordinate means x lies on a facet -> BoundaryPointError.
int cone_indicator(const SpanningTree& tree, const RationalVector& x);

// Integer points of [-bound, bound]^n, resampled until generic for every
// spanning tree of the complete graph, so one point set serves all cones.
// Deterministic given seed. SamplingExhaustedError after the retry budget.
// attempts_out, when given, receives the number of candidate draws.
std::vector<RationalVector> sample_generic_points(int n, std::uint64_t seed,
                                                  std::size_t count, long bound,
                                                  int budget_per_point = 200,
                                                  std::size_t* attempts_out = nullptr);
RationalVector sample_generic_point(int n, std::uint64_t seed, long bound);

// Generic points spread over the whole arrangement. The first n! points are
// a fixed staircase family (one per permutation, coordinates signed powers
// of 3, so at most 3^n in magnitude) whose path-cone evaluation matrix is
// invertible; rank probes and the coefficient oracle need that, and uniform
// box sampling does not deliver it at small counts. Later draws alternate
// between walking the n! path cones round-robin and uniform box points.
std::vector<RationalVector> sample_spanning_points(int n, std::uint64_t seed,
                                                   std::size_t count, long bound,
                                                   int budget_per_point = 200);

// sum_s coefficients[s] * chi_s(x).
Rational evaluate_decomposition(const Decomposition& d, const RationalVector& x);

struct VerificationFailure {
  RationalVector point;
  Rational lhs, rhs;
};

struct VerificationReport {
  int n = 0;
  std::string tree;
  std::size_t points = 0;
  std::vector<VerificationFailure> failures;
  std::map<Permutation, std::size_t> cone_hits;

  bool pass() const { return failures.empty(); }
};

// Compares chi_T(x) against the decomposition value at every point.
// Failures are data, not errors.
VerificationReport verify_decomposition(const SpanningTree& tree, const Decomposition& d,
                                        const std::vector<RationalVector>& points);

nlohmann::json report_to_json(const VerificationReport& report);

// Entry (i, j) = chi_{trees[i]}(points[j]).
RationalMatrix evaluation_matrix(const std::vector<SpanningTree>& trees,
                                 const std::vector<RationalVector>& points);

struct DimensionReport {
  std::size_t rank = 0;          // at point_count points
  std::size_t doubled_rank = 0;  // at 2 * point_count points
  bool stable = false;
};

// Sampled rank of the span of all tree indicators. The sampled rank is a
// lower bound on the true dimension, hence the doubling stability check.
DimensionReport space_dimension(int n, std::uint64_t seed, std::size_t point_count,
                                long bound = 1000000);

// Independent oracle for the decomposition coefficients: evaluates all path
// cones at generic points and solves c^T V = v_T exactly. Uses no distortion
// and no compatibility, only geometry and exact linear algebra.
std::map<Permutation, Rational> solve_coefficients_oracle(const SpanningTree& tree,
                                                          const std::vector<RationalVector>& points);
std::map<Permutation, Rational> solve_coefficients_oracle(const SpanningTree& tree,
                                                          std::uint64_t seed,
                                                          std::size_t point_count,
                                                          long bound = 1000000);

// Point list file: one point per line, comma-separated integers or "a/b".
std::string point_to_string(const RationalVector& x);
RationalVector parse_point(int n, std::string_view line);
std::vector<RationalVector> read_point_file(int n, std::istream& in);
void write_point_file(std::ostream& out, const std::vector<RationalVector>& points);

}  // namespace treecones
