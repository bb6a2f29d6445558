#include "treecones/conespace.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace treecones {

namespace {

// Row-reduce in place; returns the pivot column of each pivot row.
std::vector<std::size_t> reduced_row_echelon(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    const Rational inv = 1 / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t k) {
  RationalMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t rank(RationalMatrix m) { return reduced_row_echelon(m).size(); }

RationalVector solve_square(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw InvalidInputError("solve_square: shape mismatch");
  RationalMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[r];
  }
  const auto pivots = reduced_row_echelon(aug);
  if (pivots.size() != n || pivots.back() == n)
    throw SingularMatrixError("singular square system");
  RationalVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug.at(r, n);
  return x;
}

RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InvalidInputError("inverse: matrix not square");
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n + r) = 1;
  }
  const auto pivots = reduced_row_echelon(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw SingularMatrixError("matrix not invertible");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  RationalMatrix m = a;
  const auto pivots = reduced_row_echelon(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix tree_matrix(const SpanningTree& tree) {
  const std::size_t n = tree.n();
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const OrientedEdge& e = tree.edges()[j];
    m.at(e.head - 1, j) += 1;
    if (e.tail > 0) m.at(e.tail - 1, j) -= 1;
  }
  return m;
}

RationalVector tree_coordinates(const SpanningTree& tree, const RationalVector& x) {
  if (x.size() != static_cast<std::size_t>(tree.n()))
    throw InvalidInputError("tree_coordinates: point has wrong dimension");
  return solve_square(tree_matrix(tree), x);
}

namespace {

RationalVector matrix_apply(const RationalMatrix& m, const RationalVector& x) {
  RationalVector y(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) y[r] += m.at(r, c) * x[c];
  return y;
}

// 1/0 from precomputed inverse basis matrix; throws on a facet point.
int indicator_from_inverse(const RationalMatrix& inv, const RationalVector& x) {
  bool inside = true;
  for (std::size_t r = 0; r < inv.rows(); ++r) {
    Rational coord(0);
    for (std::size_t c = 0; c < inv.cols(); ++c)
      if (inv.at(r, c) != 0) coord += inv.at(r, c) * x[c];
    const int s = sgn(coord);
    if (s == 0) throw BoundaryPointError("point lies on a cone facet");
    if (s < 0) inside = false;
  }
  return inside ? 1 : 0;
}

std::vector<RationalMatrix> tree_inverses(const std::vector<SpanningTree>& trees) {
  std::vector<RationalMatrix> invs;
  invs.reserve(trees.size());
  for (const SpanningTree& t : trees) invs.push_back(inverse(tree_matrix(t)));
  return invs;
}

// mt19937_64 is fully specified, so seeded draws are portable; the stdlib
// distributions are not, hence the explicit rejection sampler.
long uniform_in_range(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t m = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<long>(v % m);
}

}  // namespace

int cone_indicator(const SpanningTree& tree, const RationalVector& x) {
  const RationalVector coords = tree_coordinates(tree, x);
  bool inside = true;
  for (const Rational& a : coords) {
    const int s = sgn(a);
    if (s == 0) throw BoundaryPointError("point lies on a cone facet");
    if (s < 0) inside = false;
  }
  return inside ? 1 : 0;
}

std::vector<RationalVector> sample_generic_points(int n, std::uint64_t seed,
                                                  std::size_t count, long bound,
                                                  int budget_per_point,
                                                  std::size_t* attempts_out) {
  if (n < 1) throw InvalidInputError("sample_generic_points needs n >= 1");
  if (bound < 1) throw InvalidInputError("sampling bound must be positive");
  const std::vector<SpanningTree> trees = enumerate_spanning_trees(n);
  const std::vector<RationalMatrix> invs = tree_inverses(trees);
  std::mt19937_64 rng(seed);
  std::vector<RationalVector> points;
  points.reserve(count);
  std::size_t attempts = 0;
  long attempts_left = static_cast<long>(budget_per_point) * static_cast<long>(count) +
                       budget_per_point;
  while (points.size() < count) {
    if (attempts_left-- <= 0)
      throw SamplingExhaustedError("generic sampling budget exhausted; raise bound");
    ++attempts;
    RationalVector x(n);
    for (int i = 0; i < n; ++i) x[i] = Rational(uniform_in_range(rng, -bound, bound));
    bool generic = true;
    for (const RationalMatrix& inv : invs) {
      const RationalVector coords = matrix_apply(inv, x);
      for (const Rational& a : coords)
        if (a == 0) {
          generic = false;
          break;
        }
      if (!generic) break;
    }
    if (generic) points.push_back(std::move(x));
  }
  if (attempts_out) *attempts_out = attempts;
  return points;
}

RationalVector sample_generic_point(int n, std::uint64_t seed, long bound) {
  return sample_generic_points(n, seed, 1, bound).front();
}

namespace {

// Vertex s(k) gets magnitude 3^(n+1-k), signed + at ascents of s and - at
// descents. Every subset sum is then decided by its dominant term, so the
// point is generic outright, chi_s accepts it, and the n! points together
// make the path-cone evaluation matrix invertible (their chamber sign
// patterns are mutually independent).
RationalVector staircase_point(const Permutation& s) {
  const int n = s.size();
  RationalVector x(n, Rational(0));
  long magnitude = 1;
  for (int k = n; k >= 1; --k) {
    magnitude *= 3;
    x[s(k) - 1] = Rational(s(k) > s(k - 1) ? magnitude : -magnitude);
  }
  return x;
}

}  // namespace

std::vector<RationalVector> sample_spanning_points(int n, std::uint64_t seed,
                                                   std::size_t count, long bound,
                                                   int budget_per_point) {
  if (n < 1) throw InvalidInputError("sample_spanning_points needs n >= 1");
  if (bound < 1) throw InvalidInputError("sampling bound must be positive");
  const std::vector<SpanningTree> trees = enumerate_spanning_trees(n);
  const std::vector<RationalMatrix> invs = tree_inverses(trees);
  const std::vector<Permutation> perms = all_permutations(n);
  std::vector<RationalMatrix> chambers;
  for (const Permutation& s : perms) chambers.push_back(tree_matrix(path_tree(s)));
  const long max_coeff = std::max(1L, bound / n);
  std::mt19937_64 rng(seed);
  std::vector<RationalVector> points;
  points.reserve(count);
  long attempts_left = static_cast<long>(budget_per_point) * static_cast<long>(count) +
                       budget_per_point;
  while (points.size() < count) {
    if (attempts_left-- <= 0)
      throw SamplingExhaustedError("generic sampling budget exhausted; raise bound");
    RationalVector x(n);
    if (points.size() < perms.size()) {
      x = staircase_point(perms[points.size()]);
    } else if ((points.size() - perms.size()) % 2 == 0) {
      const std::size_t at = (points.size() - perms.size()) / 2;
      const RationalMatrix& basis = chambers[at % chambers.size()];
      RationalVector u(n);
      for (int i = 0; i < n; ++i) u[i] = Rational(uniform_in_range(rng, 1, max_coeff));
      x = matrix_apply(basis, u);
    } else {
      for (int i = 0; i < n; ++i) x[i] = Rational(uniform_in_range(rng, -bound, bound));
    }
    bool generic = true;
    for (const RationalMatrix& inv : invs) {
      const RationalVector coords = matrix_apply(inv, x);
      for (const Rational& a : coords)
        if (a == 0) {
          generic = false;
          break;
        }
      if (!generic) break;
    }
    if (generic) points.push_back(std::move(x));
  }
  return points;
}

Rational evaluate_decomposition(const Decomposition& d, const RationalVector& x) {
  Rational value(0);
  for (const auto& [s, c] : d.coefficients) value += c * cone_indicator(path_tree(s), x);
  return value;
}

VerificationReport verify_decomposition(const SpanningTree& tree, const Decomposition& d,
                                        const std::vector<RationalVector>& points) {
  VerificationReport report;
  report.n = tree.n();
  report.tree = tree_to_string(tree);
  report.points = points.size();
  const RationalMatrix tree_inv = inverse(tree_matrix(tree));
  std::vector<std::pair<Permutation, RationalMatrix>> cones;
  for (const auto& [s, c] : d.coefficients) {
    cones.emplace_back(s, inverse(tree_matrix(path_tree(s))));
    report.cone_hits.emplace(s, 0);
  }
  for (const RationalVector& x : points) {
    const Rational lhs(indicator_from_inverse(tree_inv, x));
    Rational rhs(0);
    for (const auto& [s, inv] : cones) {
      const int hit = indicator_from_inverse(inv, x);
      if (hit) {
        rhs += d.coefficients.at(s);
        ++report.cone_hits[s];
      }
    }
    if (lhs != rhs) report.failures.push_back({x, lhs, rhs});
  }
  return report;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["tree"] = report.tree;
  j["points"] = report.points;
  j["pass"] = report.pass();
  nlohmann::json failures = nlohmann::json::array();
  for (const VerificationFailure& f : report.failures)
    failures.push_back({{"point", point_to_string(f.point)},
                        {"lhs", to_string(f.lhs)},
                        {"rhs", to_string(f.rhs)}});
  j["failures"] = failures;
  nlohmann::json hits = nlohmann::json::array();
  for (const auto& [s, h] : report.cone_hits)
    hits.push_back({{"perm", permutation_to_string(s)}, {"hits", h}});
  j["cone_hits"] = hits;
  return j;
}

RationalMatrix evaluation_matrix(const std::vector<SpanningTree>& trees,
                                 const std::vector<RationalVector>& points) {
  const std::vector<RationalMatrix> invs = tree_inverses(trees);
  RationalMatrix m(trees.size(), points.size());
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      m.at(i, j) = indicator_from_inverse(invs[i], points[j]);
  return m;
}

DimensionReport space_dimension(int n, std::uint64_t seed, std::size_t point_count,
                                long bound) {
  std::size_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  if (point_count < 2 * fact)
    throw InvalidInputError("space_dimension needs at least 2*n! points");
  const std::vector<SpanningTree> trees = enumerate_spanning_trees(n);
  const std::vector<RationalVector> points =
      sample_spanning_points(n, seed, 2 * point_count, bound);
  const RationalMatrix full = evaluation_matrix(trees, points);
  RationalMatrix half(full.rows(), point_count);
  for (std::size_t r = 0; r < full.rows(); ++r)
    for (std::size_t c = 0; c < point_count; ++c) half.at(r, c) = full.at(r, c);
  DimensionReport report;
  report.rank = rank(std::move(half));
  report.doubled_rank = rank(full);
  report.stable = report.rank == report.doubled_rank;
  return report;
}

std::map<Permutation, Rational> solve_coefficients_oracle(
    const SpanningTree& tree, const std::vector<RationalVector>& points) {
  const int n = tree.n();
  const std::vector<Permutation> perms = all_permutations(n);
  std::vector<SpanningTree> paths;
  paths.reserve(perms.size());
  for (const Permutation& s : perms) paths.push_back(path_tree(s));
  const RationalMatrix v = evaluation_matrix(paths, points);
  const RationalMatrix target = evaluation_matrix({tree}, points);

  // c^T V = v_T  <=>  V^T c = v_T^T; V must have full row rank n!.
  RationalMatrix aug(points.size(), perms.size() + 1);
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t s = 0; s < perms.size(); ++s) aug.at(p, s) = v.at(s, p);
    aug.at(p, perms.size()) = target.at(0, p);
  }
  const auto pivots = reduced_row_echelon(aug);
  if (!pivots.empty() && pivots.back() == perms.size())
    throw InconsistentSystemError(
        "no exact path-cone expansion exists for the sampled values");
  if (pivots.size() < perms.size())
    throw RankDeficientError("path-cone evaluation matrix has rank " +
                             std::to_string(pivots.size()) + " < n!; add points");
  std::map<Permutation, Rational> out;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (aug.at(r, perms.size()) != 0) out.emplace(perms[pivots[r]], aug.at(r, perms.size()));
  return out;
}

std::map<Permutation, Rational> solve_coefficients_oracle(const SpanningTree& tree,
                                                          std::uint64_t seed,
                                                          std::size_t point_count,
                                                          long bound) {
  std::size_t fact = 1;
  for (int i = 2; i <= tree.n(); ++i) fact *= i;
  if (point_count < 2 * fact)
    throw InvalidInputError("solve_coefficients_oracle needs at least 2*n! points");
  return solve_coefficients_oracle(tree,
                                   sample_spanning_points(tree.n(), seed, point_count, bound));
}

std::string point_to_string(const RationalVector& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << to_string(x[i]);
  }
  return os.str();
}

RationalVector parse_point(int n, std::string_view line) {
  RationalVector x;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(',', start);
    if (end == std::string_view::npos) end = line.size();
    x.push_back(parse_rational(line.substr(start, end - start)));
    start = end + 1;
  }
  if (x.size() != static_cast<std::size_t>(n))
    throw FormatError("point has wrong number of coordinates");
  return x;
}

std::vector<RationalVector> read_point_file(int n, std::istream& in) {
  std::vector<RationalVector> points;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    points.push_back(parse_point(n, line));
  }
  return points;
}

void write_point_file(std::ostream& out, const std::vector<RationalVector>& points) {
  for (const RationalVector& x : points) out << point_to_string(x) << '\n';
}

}  // namespace treecones
