// treecones: exact decomposition of spanning-tree simplicial cones of a
// complete graph into signed sums of path-tree cones, with geometric and
// symbolic verification commands.

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "treecones/conespace.hpp"
#include "treecones/parallel.hpp"
#include "treecones/polyalg.hpp"
#include "treecones/poset.hpp"
#include "treecones/treedecomp.hpp"

using namespace treecones;
using nlohmann::json;

namespace {

// Exit codes: 0 pass, 1 verification failure, 2 usage/parse error,
// 3 semantic input error.
struct ExitWith {
  int code;
};

struct Options {
  std::uint64_t seed = 42;
  long bound = 1000000;
  std::string format = "text";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

SpanningTree tree_arg(int n, const std::string& text) {
  try {
    return parse_tree(n, text);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    throw ExitWith{2};
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    throw ExitWith{3};
  }
}

Permutation perm_arg(int n, const std::string& text) {
  try {
    const Permutation s = parse_permutation(text);
    if (s.size() != n) throw InvalidInputError("permutation length differs from n");
    return s;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    throw ExitWith{2};
  }
}

void require_n(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    std::cerr << "error: n must be in [" << lo << ", " << hi << "]\n";
    throw ExitWith{2};
  }
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long tree_count(int n) {
  long c = 1;
  for (int i = 0; i < n - 1; ++i) c *= n + 1;
  return c;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

int cmd_enumerate(const Options& opt, int n) {
  require_n(n, 1, 6);
  const auto trees = enumerate_spanning_trees(n);
  json jtrees = json::array();
  std::ostringstream text;
  long paths = 0;
  text << "tree\tdistortion\tpath\textensions\n";
  for (const SpanningTree& t : trees) {
    const auto s = is_path_tree(t);
    if (s) ++paths;
    const auto exts = linear_extensions(t).size();
    jtrees.push_back({{"tree", tree_to_string(t)},
                      {"distortion", distortion(t)},
                      {"path_perm", s ? json(permutation_to_string(*s)) : json()},
                      {"extensions", exts}});
    text << tree_to_string(t) << '\t' << distortion(t) << '\t'
         << (s ? permutation_to_string(*s) : "-") << '\t' << exts << '\n';
  }
  text << trees.size() << " spanning trees on [0:" << n << "] (expected " << tree_count(n)
       << "), " << paths << " path trees (expected " << factorial(n) << ")\n";
  const json j = {{"command", "enumerate"}, {"n", n},
                  {"count", trees.size()},  {"expected", tree_count(n)},
                  {"path_trees", paths},    {"path_trees_expected", factorial(n)},
                  {"trees", jtrees}};
  emit(opt, j, text.str());
  return 0;
}

int cmd_decompose(const Options& opt, int n, const std::string& tree_text) {
  require_n(n, 1, 8);
  const SpanningTree tree = tree_arg(n, tree_text);
  const Decomposition d = decompose(tree);
  json j = decomposition_to_json(d);
  j["command"] = "decompose";
  j["distortion"] = distortion(tree);
  json compat = json::array();
  std::ostringstream text;
  text << "tree " << tree_to_string(tree) << "  (n=" << n << ", distortion "
       << distortion(tree) << ")\ncompatible permutations:";
  for (const auto& [s, c] : d.coefficients) {
    compat.push_back({{"perm", permutation_to_string(s)},
                      {"distortion", distortion(path_tree(s))}});
    text << ' ' << permutation_to_string(s) << " (d=" << distortion(path_tree(s)) << ')';
  }
  j["compatible"] = compat;
  text << "\nchi_T =";
  for (const auto& [s, c] : d.coefficients)
    text << (c > 0 ? " + " : " - ") << "chi[" << permutation_to_string(s) << ']';
  text << '\n';
  emit(opt, j, text.str());
  return 0;
}

int cmd_verify(const Options& opt, int n, const std::string& tree_text, bool all,
               std::size_t samples, const std::string& points_file, bool mutate) {
  require_n(n, 1, all ? 5 : 6);
  std::vector<SpanningTree> trees;
  if (all)
    trees = enumerate_spanning_trees(n);
  else
    trees.push_back(tree_arg(n, tree_text));

  std::vector<RationalVector> points;
  if (!points_file.empty()) {
    std::ifstream in(points_file);
    if (!in) {
      std::cerr << "error: cannot open " << points_file << "\n";
      throw ExitWith{2};
    }
    try {
      points = read_point_file(n, in);
    } catch (const FormatError& e) {
      std::cerr << "error: " << e.what() << "\n";
      throw ExitWith{2};
    }
  } else {
    points = sample_spanning_points(n, opt.seed, samples, opt.bound);
  }

  std::vector<VerificationReport> reports(trees.size());
  try {
    parallel_for(trees.size(), opt.jobs, [&](std::size_t i) {
      Decomposition d = decompose(trees[i]);
      if (mutate) d.coefficients.begin()->second *= -1;
      reports[i] = verify_decomposition(trees[i], d, points);
    });
  } catch (const BoundaryPointError& e) {
    std::cerr << "error: " << e.what() << " (points must be generic)\n";
    throw ExitWith{3};
  }

  bool pass = true;
  std::size_t checks = 0;
  json jreports = json::array();
  std::ostringstream text;
  for (const VerificationReport& r : reports) {
    pass = pass && r.pass();
    checks += r.points;
    jreports.push_back(report_to_json(r));
    text << "tree " << r.tree << ": " << r.points << " points, " << r.failures.size()
         << " failures  [" << (r.pass() ? "pass" : "FAIL") << "]\n";
  }
  text << (pass ? "PASS" : "FAIL") << ": " << trees.size() << " trees, " << checks
       << " point checks\n";
  const json j = {{"command", "verify"}, {"n", n},       {"samples", points.size()},
                  {"seed", opt.seed},    {"pass", pass}, {"mutated", mutate},
                  {"reports", jreports}};
  emit(opt, j, text.str());
  return pass ? 0 : 1;
}

int cmd_dim(const Options& opt, int n, std::size_t points) {
  require_n(n, 1, 4);
  if (points == 0) points = 4 * static_cast<std::size_t>(factorial(n));
  const DimensionReport geo = space_dimension(n, opt.seed, points, opt.bound);
  const std::size_t soc = soc_dimension(n);
  const std::size_t expected = static_cast<std::size_t>(factorial(n));
  const bool pass = geo.rank == expected && geo.stable && soc == expected;
  std::ostringstream text;
  text << "n=" << n << ": geometric rank " << geo.rank << " (doubled: " << geo.doubled_rank
       << "), symbolic rank " << soc << ", n! = " << expected << "  ["
       << (pass ? "pass" : "FAIL") << "]\n";
  const json j = {{"command", "dim"},
                  {"n", n},
                  {"points", points},
                  {"geometric_rank", geo.rank},
                  {"geometric_rank_doubled", geo.doubled_rank},
                  {"stable", geo.stable},
                  {"symbolic_rank", soc},
                  {"expected", expected},
                  {"pass", pass}};
  emit(opt, j, text.str());
  return pass ? 0 : 1;
}

int cmd_dual(const Options& opt, int n, const std::string& perm_text) {
  require_n(n, 1, 5);
  const Permutation s = perm_arg(n, perm_text);
  const Polynomial m = dual_polynomial(reorient(complete_graph(n), s));
  const Polynomial p = p_basis(s);
  const Rational pair = pairing(p, m);
  std::ostringstream text;
  text << "s = " << permutation_to_string(s) << "\nM_s = " << polynomial_to_string(m)
       << "\nP_s = " << polynomial_to_string(p) << "\n<P_s, M_s> = " << to_string(pair)
       << "\n";
  const json j = {{"command", "dual"},
                  {"n", n},
                  {"perm", permutation_to_string(s)},
                  {"M", polynomial_to_string(m)},
                  {"P", polynomial_to_string(p)},
                  {"pairing", to_string(pair)}};
  emit(opt, j, text.str());
  return 0;
}

int cmd_crosscheck(const Options& opt, int n, const std::string& tree_text, bool all) {
  require_n(n, 1, 4);
  std::vector<SpanningTree> trees;
  if (all)
    trees = enumerate_spanning_trees(n);
  else
    trees.push_back(tree_arg(n, tree_text));

  const DualBasis basis = DualBasis::build(n);
  const auto points = sample_spanning_points(
      n, opt.seed, 4 * static_cast<std::size_t>(factorial(n)), opt.bound);

  struct Row {
    bool pass = false;
    std::map<Permutation, Rational> closed, oracle, symbolic;
  };
  std::vector<Row> rows(trees.size());
  parallel_for(trees.size(), opt.jobs, [&](std::size_t i) {
    Row& row = rows[i];
    row.closed = decompose(trees[i]).coefficients;
    row.oracle = solve_coefficients_oracle(trees[i], points);
    row.symbolic = crosscheck(trees[i], basis);
    row.pass = row.closed == row.oracle && row.closed == row.symbolic;
  });

  bool pass = true;
  json jtrees = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    pass = pass && rows[i].pass;
    json coeffs = json::array();
    for (const auto& [s, c] : rows[i].closed)
      coeffs.push_back({{"perm", permutation_to_string(s)}, {"c", to_string(c)}});
    jtrees.push_back({{"tree", tree_to_string(trees[i])},
                      {"coefficients", coeffs},
                      {"pass", rows[i].pass}});
    text << "tree " << tree_to_string(trees[i])
         << ": closed-form == geometric oracle == symbolic  ["
         << (rows[i].pass ? "pass" : "FAIL") << "]\n";
  }
  text << (pass ? "PASS" : "FAIL") << ": " << trees.size()
       << " trees checked three ways\n";
  const json j = {{"command", "crosscheck"}, {"n", n}, {"pass", pass}, {"trees", jtrees}};
  emit(opt, j, text.str());
  return pass ? 0 : 1;
}

json ray_point_2d(const OrientedEdge& e) {
  // coordinates of the edge vector in the plane
  const int x1 = (e.head == 1 ? 1 : 0) - (e.tail == 1 ? 1 : 0);
  const int x2 = (e.head == 2 ? 1 : 0) - (e.tail == 2 ? 1 : 0);
  return json::array({std::to_string(x1), std::to_string(x2)});
}

json cut_point_3d(const OrientedEdge& e) {
  // The cut plane is x1 + 2*x2 + 3*x3 = 1; the weights 0 < 1 < 2 < 3 are
  // increasing, so every canonically oriented edge ray crosses it once.
  // Emits the (x1, x2) chart of the intersection point.
  RationalVector w(3, Rational(0));
  if (e.head > 0) w[e.head - 1] += 1;
  if (e.tail > 0) w[e.tail - 1] -= 1;
  const Rational ell = w[0] + 2 * w[1] + 3 * w[2];
  return json::array({to_string(w[0] / ell), to_string(w[1] / ell)});
}

json cone_polygon(int n, const SpanningTree& tree) {
  json polygon = json::array();
  if (n == 2) {
    polygon.push_back(json::array({"0", "0"}));
    for (const OrientedEdge& e : tree.edges()) polygon.push_back(ray_point_2d(e));
  } else {
    for (const OrientedEdge& e : tree.edges()) polygon.push_back(cut_point_3d(e));
  }
  return polygon;
}

int cmd_figure(const Options& opt, int n, const std::string& tree_text,
               const std::string& out_path) {
  if (n != 2 && n != 3) {
    std::cerr << "error: figure supports n = 2 or 3\n";
    throw ExitWith{2};
  }
  const SpanningTree tree = tree_arg(n, tree_text);
  const Decomposition d = decompose(tree);
  json cones = json::array();
  for (const auto& [s, c] : d.coefficients)
    cones.push_back({{"perm", permutation_to_string(s)},
                     {"sign", sgn(c)},
                     {"label", sgn(c) > 0 ? "+1" : "-1"},
                     {"polygon", cone_polygon(n, path_tree(s))}});
  json j = {{"command", "figure"},
            {"n", n},
            {"tree", tree_to_string(tree)},
            {"target", {{"label", "target"}, {"polygon", cone_polygon(n, tree)}}},
            {"cones", cones}};
  if (n == 3) j["cut"] = {1, 2, 3};
  if (out_path.empty()) {
    std::cout << j.dump() << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      throw ExitWith{2};
    }
    out << j.dump() << "\n";
    if (opt.format == "text") std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path-tree cone decompositions of complete-graph spanning-tree cones"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "RNG seed for sampled points")->capture_default_str();
  app.add_option("--bound", opt.bound, "coordinate bound for sampled points")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "parallel workers")->capture_default_str();

  int n = 0;
  std::string tree_text, perm_text, points_file, out_path;
  bool all = false, mutate = false;
  std::size_t samples = 1000, points = 0;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list all spanning trees");
  enumerate->fallthrough();
  enumerate->add_option("--n", n, "vertex count minus one")->required();

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "expand a tree cone in path cones");
  decompose_cmd->fallthrough();
  decompose_cmd->add_option("--n", n)->required();
  decompose_cmd->add_option("--tree", tree_text, "edges, e.g. 0-1,1-2")->required();

  CLI::App* verify = app.add_subcommand("verify", "pointwise check of decompositions");
  verify->fallthrough();
  verify->add_option("--n", n)->required();
  verify->add_option("--tree", tree_text);
  verify->add_flag("--all", all, "verify every spanning tree");
  verify->add_option("--samples", samples, "sampled points")->capture_default_str();
  verify->add_option("--points-file", points_file, "use points from file instead");
  verify->add_flag("--mutate", mutate, "flip one coefficient (self-test; must fail)");

  CLI::App* dim = app.add_subcommand("dim", "geometric and symbolic dimension of the span");
  dim->fallthrough();
  dim->add_option("--n", n)->required();
  dim->add_option("--points", points, "sampled points (default 4*n!)");

  CLI::App* dual = app.add_subcommand("dual", "dual polynomial M_s and basis polynomial P_s");
  dual->fallthrough();
  dual->add_option("--n", n)->required();
  dual->add_option("--perm", perm_text, "permutation, e.g. 213")->required();

  CLI::App* cross = app.add_subcommand("crosscheck",
                                       "closed form vs geometric oracle vs symbolic route");
  cross->fallthrough();
  cross->add_option("--n", n)->required();
  cross->add_option("--tree", tree_text);
  cross->add_flag("--all", all, "check every spanning tree");

  CLI::App* figure = app.add_subcommand("figure", "cross-section plot data (n = 2 or 3)");
  figure->fallthrough();
  figure->add_option("--n", n)->required();
  figure->add_option("--tree", tree_text)->required();
  figure->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate(opt, n);
    if (app.got_subcommand(decompose_cmd)) return cmd_decompose(opt, n, tree_text);
    if (app.got_subcommand(verify)) {
      if (!all && tree_text.empty()) {
        std::cerr << "error: give --tree or --all\n";
        return 2;
      }
      return cmd_verify(opt, n, tree_text, all, samples, points_file, mutate);
    }
    if (app.got_subcommand(dim)) return cmd_dim(opt, n, points);
    if (app.got_subcommand(dual)) return cmd_dual(opt, n, perm_text);
    if (app.got_subcommand(cross)) {
      if (!all && tree_text.empty()) {
        std::cerr << "error: give --tree or --all\n";
        return 2;
      }
      return cmd_crosscheck(opt, n, tree_text, all);
    }
    if (app.got_subcommand(figure)) return cmd_figure(opt, n, tree_text, out_path);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
