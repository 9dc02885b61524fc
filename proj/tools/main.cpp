// degroot: command-line front end for the opinion-pooling toolkit.
//
// Subcommands: validate, analyze, limit, stationary, synthesize, verify,
// simulate, export-dot. Exit codes are uniform across commands:
//   0  success
//   1  validation or verdict failure
//   2  non-convergence / indeterminate result
//   3  I/O or parse error
// Output is deterministic; --json renders numbers in fixed-width scientific
// notation with 12 significant digits.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <degroot/degroot.hpp>

namespace {

using degroot::Matrix;
using degroot::Vector;

std::string yn(bool b) { return b ? "yes" : "no"; }
std::string jb(bool b) { return b ? "true" : "false"; }

std::string human_vector(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += degroot::fmt_human(v[i]);
  }
  return s;
}

std::string json_vector(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += degroot::fmt_json(v[i]);
  }
  return s + "]";
}

std::string json_matrix(const Matrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (int j = 0; j < m.size(); ++j) {
      if (j) s += ", ";
      s += degroot::fmt_json(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

// Vertex lists are 1-based on the command line and in all renderings.
std::string json_vertices(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i] + 1);
  }
  return s + "]";
}

void print_matrix_rows(const Matrix& m) {
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j) std::cout << ' ';
      std::cout << degroot::fmt_human(m(i, j));
    }
    std::cout << '\n';
  }
}

double parse_double_arg(const std::string& s, const std::string& flag) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw degroot::ParseError(flag + ": not a number: '" + s + "'");
  }
  if (pos != s.size())
    throw degroot::ParseError(flag + ": not a number: '" + s + "'");
  return v;
}

// Accepts a plain decimal or a fraction like "10/101".
double parse_fraction_arg(const std::string& s, const std::string& flag) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_double_arg(s, flag);
  const double num = parse_double_arg(s.substr(0, slash), flag);
  const double den = parse_double_arg(s.substr(slash + 1), flag);
  if (den == 0.0) throw degroot::ParseError(flag + ": zero denominator");
  return num / den;
}

// Comma-separated 1-based vertex list, e.g. "4,3,2,1".
std::vector<int> parse_order_arg(const std::string& s) {
  std::vector<int> order;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw degroot::ParseError("--order: not a vertex number: '" + tok +
                                "'");
    }
    if (pos != tok.size())
      throw degroot::ParseError("--order: not a vertex number: '" + tok +
                                "'");
    order.push_back(v - 1);
  }
  return order;
}

std::string order_path(const std::vector<int>& order) {
  std::string s;
  for (int v : order) s += std::to_string(v + 1) + " -> ";
  s += std::to_string(order.front() + 1);
  return s;
}

degroot::StochasticMatrix load_stochastic(const std::string& path,
                                          double row_tol) {
  return degroot::validate_stochastic(degroot::read_matrix(path), row_tol);
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path, double row_tol, bool json) {
  const Matrix raw = degroot::read_matrix(path);
  const int n = raw.size();
  Vector deviation(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += raw(i, j);
    deviation[static_cast<std::size_t>(i)] = s - 1.0;
  }
  try {
    degroot::validate_stochastic(raw, row_tol);
  } catch (const degroot::Error& e) {
    if (json)
      std::cout << "{\"valid\": false, \"n\": " << n << ", \"error\": \""
                << e.what() << "\"}\n";
    else
      std::cerr << "invalid stochastic matrix: " << e.what() << '\n';
    return 1;
  }
  if (json) {
    std::cout << "{\"valid\": true, \"n\": " << n
              << ", \"row_sum_deviations\": " << json_vector(deviation)
              << "}\n";
  } else {
    std::cout << "valid stochastic matrix, n=" << n << '\n';
    for (int i = 0; i < n; ++i)
      std::cout << "row " << (i + 1) << " sum deviation: "
                << degroot::fmt_human(deviation[static_cast<std::size_t>(i)])
                << '\n';
  }
  return 0;
}

int cmd_analyze(const std::string& path, double row_tol, double zero_tol,
                double pivot_tol, bool json) {
  const auto P = load_stochastic(path, row_tol);
  const auto g = degroot::digraph_from_matrix(P, zero_tol);
  const auto rep = degroot::analyze(g);
  const int rank_l = degroot::matrix_rank(degroot::kirchhoff(g), pivot_tol);
  const int nc = static_cast<int>(rep.components.size());

  if (json) {
    std::ostringstream out;
    out << "{\"n\": " << g.size() << ", \"components\": [";
    for (int c = 0; c < nc; ++c) {
      if (c) out << ", ";
      out << json_vertices(rep.components[static_cast<std::size_t>(c)]);
    }
    out << "], \"basic\": [";
    for (int c = 0; c < nc; ++c)
      out << (c ? ", " : "") << jb(rep.basic[static_cast<std::size_t>(c)]);
    out << "], \"periods\": [";
    for (int c = 0; c < nc; ++c) {
      out << (c ? ", " : "");
      const int p = rep.periods[static_cast<std::size_t>(c)];
      if (p == degroot::kNoPeriod)
        out << "null";
      else
        out << p;
    }
    out << "], \"nu\": " << rep.nu << ", \"b\": " << rep.b
        << ", \"rank_L\": " << rank_l << ", \"has_spanning_out_tree\": "
        << jb(rep.has_spanning_out_tree) << ", \"limit_exists\": "
        << jb(rep.limit_exists) << ", \"regular\": " << jb(rep.regular)
        << "}\n";
    std::cout << out.str();
    return 0;
  }

  std::cout << "n: " << g.size() << '\n';
  for (int c = 0; c < nc; ++c) {
    std::cout << "component " << (c + 1) << ": {";
    const auto& comp = rep.components[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < comp.size(); ++i)
      std::cout << (i ? " " : "") << (comp[i] + 1);
    std::cout << "} basic=" << yn(rep.basic[static_cast<std::size_t>(c)]);
    const int p = rep.periods[static_cast<std::size_t>(c)];
    if (p == degroot::kNoPeriod)
      std::cout << " period=none";
    else
      std::cout << " period=" << p;
    std::cout << '\n';
  }
  std::cout << "nu: " << rep.nu << '\n';
  std::cout << "b: " << rep.b << '\n';
  std::cout << "rank L: " << rank_l << '\n';
  std::cout << "spanning out-tree: " << yn(rep.has_spanning_out_tree) << '\n';
  std::cout << "limit exists: " << yn(rep.limit_exists) << '\n';
  std::cout << "regular: " << yn(rep.regular) << '\n';
  return 0;
}

int cmd_limit(const std::string& path, double row_tol, double tol,
              int max_doublings, bool json) {
  const auto P = load_stochastic(path, row_tol);
  const auto res = degroot::limit_powers(P, tol, max_doublings);
  if (json) {
    std::cout << "{\"converged\": " << jb(res.converged())
              << ", \"doublings\": " << res.doublings_used
              << ", \"residual\": " << degroot::fmt_json(res.residual);
    if (res.converged()) std::cout << ", \"limit\": " << json_matrix(res.limit);
    std::cout << "}\n";
    return res.converged() ? 0 : 2;
  }
  std::cout << "converged: " << yn(res.converged()) << '\n';
  std::cout << "doublings: " << res.doublings_used << '\n';
  std::cout << "residual: " << degroot::fmt_human(res.residual) << '\n';
  if (!res.converged()) return 2;
  print_matrix_rows(res.limit);
  return 0;
}

int cmd_stationary(const std::string& path, double row_tol,
                   const std::string& method, double tol, int max_doublings,
                   bool json) {
  const auto P = load_stochastic(path, row_tol);
  Vector pi;
  if (method == "linear") {
    pi = degroot::stationary_vector(P).values();
  } else if (method == "trees") {
    const auto g = degroot::digraph_from_matrix(P);
    pi = degroot::tree_weight_vector(g).normalized_weights().values();
  } else {  // power
    const auto rep = degroot::analyze(degroot::digraph_from_matrix(P));
    if (rep.nu != 1) throw degroot::NotUnique(rep.nu);
    const auto res = degroot::limit_powers(P, tol, max_doublings);
    if (!res.converged()) {
      std::cerr << "power method did not converge: residual="
                << degroot::fmt_human(res.residual) << " after "
                << res.doublings_used << " doublings\n";
      return 2;
    }
    Vector row(static_cast<std::size_t>(P.size()));
    for (int j = 0; j < P.size(); ++j)
      row[static_cast<std::size_t>(j)] = res.limit(0, j);
    pi = degroot::ProbabilityVector(std::move(row)).values();
  }
  if (json)
    std::cout << "{\"method\": \"" << method << "\", \"pi\": "
              << json_vector(pi) << "}\n";
  else
    std::cout << human_vector(pi) << '\n';
  return 0;
}

int cmd_synthesize(const std::string& pi_path, const std::string& beta_str,
                   const std::string& order_str, const std::string& out_path,
                   const std::string& dot_path, bool json) {
  const degroot::ProbabilityVector pi(degroot::read_vector(pi_path));
  std::optional<double> beta;
  if (!beta_str.empty()) beta = parse_fraction_arg(beta_str, "--beta");
  std::vector<int> order;
  if (!order_str.empty()) order = parse_order_arg(order_str);

  const auto spec = degroot::cycle_from_pi(pi, beta, order);
  const auto ph = degroot::cycle_to_matrix(spec);
  if (!out_path.empty()) degroot::write_matrix(out_path, ph.matrix());
  if (!dot_path.empty())
    degroot::detail::write_text_file(
        dot_path, degroot::to_dot(degroot::cycle_to_digraph(spec), true));

  if (json) {
    std::cout << "{\"n\": " << spec.n << ", \"order\": "
              << json_vertices(spec.order) << ", \"beta\": "
              << degroot::fmt_json(*spec.beta) << ", \"entering\": "
              << json_vector(spec.entering_weight) << ", \"loop\": "
              << json_vector(spec.loop_weight) << ", \"matrix\": "
              << json_matrix(ph.matrix()) << "}\n";
    return 0;
  }
  std::cout << "n: " << spec.n << '\n';
  std::cout << "order: " << order_path(spec.order) << '\n';
  std::cout << "beta: " << degroot::fmt_human(*spec.beta) << '\n';
  for (int k = 0; k < spec.n; ++k)
    std::cout << "vertex " << (k + 1) << ": entering="
              << degroot::fmt_human(
                     spec.entering_weight[static_cast<std::size_t>(k)])
              << " loop="
              << degroot::fmt_human(
                     spec.loop_weight[static_cast<std::size_t>(k)])
              << '\n';
  return 0;
}

int cmd_verify(const std::string& a_path, const std::string& b_path,
               double row_tol, double tol, bool json) {
  const auto a = load_stochastic(a_path, row_tol);
  const auto b = load_stochastic(b_path, row_tol);
  const auto rep = degroot::verify_equivalence(a, b, tol);

  using Verdict = degroot::EquivalenceReport::Verdict;
  const std::string verdict = rep.verdict == Verdict::equivalent
                                  ? "equivalent"
                                  : rep.verdict == Verdict::not_equivalent
                                        ? "not_equivalent"
                                        : "indeterminate";
  if (json) {
    std::cout << "{\"a_converges\": " << jb(rep.a_converges)
              << ", \"b_converges\": " << jb(rep.b_converges)
              << ", \"a_consensus\": " << jb(rep.a_consensus)
              << ", \"b_consensus\": " << jb(rep.b_consensus)
              << ", \"limit_distance\": "
              << (rep.limit_distance
                      ? degroot::fmt_json(*rep.limit_distance)
                      : std::string("null"))
              << ", \"weight_distance\": "
              << (rep.weight_distance
                      ? degroot::fmt_json(*rep.weight_distance)
                      : std::string("null"))
              << ", \"verdict\": \"" << verdict << "\"}\n";
  } else {
    std::cout << "a converges: " << yn(rep.a_converges) << '\n';
    std::cout << "b converges: " << yn(rep.b_converges) << '\n';
    if (rep.limit_distance)
      std::cout << "limit distance: "
                << degroot::fmt_human(*rep.limit_distance) << '\n';
    if (rep.weight_distance)
      std::cout << "weight distance: "
                << degroot::fmt_human(*rep.weight_distance) << '\n';
    std::cout << "verdict: " << verdict << '\n';
  }
  switch (rep.verdict) {
    case Verdict::equivalent:
      return 0;
    case Verdict::not_equivalent:
      return 1;
    case Verdict::indeterminate:
      return 2;
  }
  return 2;
}

int cmd_simulate(const std::string& matrix_path, const std::string& s0_path,
                 int steps, double row_tol, const std::string& out_path,
                 bool json) {
  const auto P = load_stochastic(matrix_path, row_tol);
  const Vector s0 = degroot::read_vector(s0_path);
  const auto traj = degroot::iterate_opinions(P, s0, steps);
  const int n = P.size();

  std::ostringstream csv;
  csv << "step";
  for (int j = 1; j <= n; ++j) csv << ",s" << j;
  csv << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    csv << k;
    for (double x : traj[k]) csv << ',' << degroot::fmt_file(x);
    csv << '\n';
  }

  if (!out_path.empty()) degroot::detail::write_text_file(out_path, csv.str());
  if (json) {
    std::cout << "{\"steps\": " << steps << ", \"n\": " << n
              << ", \"trajectory\": [";
    for (std::size_t k = 0; k < traj.size(); ++k) {
      if (k) std::cout << ", ";
      std::cout << json_vector(traj[k]);
    }
    std::cout << "]}\n";
  } else if (out_path.empty()) {
    std::cout << csv.str();
  }
  return 0;
}

int cmd_export_dot(const std::string& path, double row_tol, double zero_tol,
                   bool show_loops, bool json) {
  const auto P = load_stochastic(path, row_tol);
  const auto g = degroot::digraph_from_matrix(P, zero_tol);
  if (json) {
    std::vector<degroot::Arc> arcs = g.arcs();
    std::sort(arcs.begin(), arcs.end(),
              [](const degroot::Arc& a, const degroot::Arc& b) {
                return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
              });
    std::cout << "{\"n\": " << g.size() << ", \"arcs\": [";
    bool first = true;
    for (const auto& a : arcs) {
      if (a.tail == a.head && !show_loops) continue;
      if (!first) std::cout << ", ";
      first = false;
      std::cout << "{\"tail\": " << (a.tail + 1) << ", \"head\": "
                << (a.head + 1) << ", \"weight\": "
                << degroot::fmt_json(a.weight) << "}";
    }
    std::cout << "]}\n";
    return 0;
  }
  std::cout << degroot::to_dot(g, show_loops);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "DeGroot opinion pooling: convergence analysis, stationary vectors, "
      "and Hamiltonian-cycle synthesis",
      "degroot"};
  app.require_subcommand(1);
  int rc = 0;

  // validate ----------------------------------------------------------------
  struct {
    std::string matrix;
    double row_tol = degroot::kDefaultRowTol;
    bool json = false;
  } v;
  auto* validate =
      app.add_subcommand("validate", "Check that a file holds a row-stochastic matrix");
  validate->add_option("matrix", v.matrix, "Matrix file (.csv or .json)")
      ->required();
  validate->add_option("--row-tol", v.row_tol, "Allowed row-sum deviation")
      ->capture_default_str();
  validate->add_flag("--json", v.json, "Machine-readable output");
  validate->callback([&] { rc = cmd_validate(v.matrix, v.row_tol, v.json); });

  // analyze -----------------------------------------------------------------
  struct {
    std::string matrix;
    double row_tol = degroot::kDefaultRowTol;
    double zero_tol = degroot::kDefaultZeroTol;
    double pivot_tol = degroot::kDefaultPivotTol;
    bool json = false;
  } a;
  auto* analyze = app.add_subcommand(
      "analyze", "Structure of the communication digraph: components, "
                 "periods, convergence criteria");
  analyze->add_option("matrix", a.matrix, "Matrix file (.csv or .json)")
      ->required();
  analyze->add_option("--row-tol", a.row_tol, "Allowed row-sum deviation")
      ->capture_default_str();
  analyze
      ->add_option("--zero-tol", a.zero_tol,
                   "Entries at or below this threshold are treated as absent "
                   "arcs")
      ->capture_default_str();
  analyze
      ->add_option("--pivot-tol", a.pivot_tol,
                   "Pivot threshold for the rank computation")
      ->capture_default_str();
  analyze->add_flag("--json", a.json, "Machine-readable output");
  analyze->callback([&] {
    rc = cmd_analyze(a.matrix, a.row_tol, a.zero_tol, a.pivot_tol, a.json);
  });

  // limit ---------------------------------------------------------------
  struct {
    std::string matrix;
    double row_tol = degroot::kDefaultRowTol;
    double tol = degroot::kDefaultLimitTol;
    int max_doublings = degroot::kDefaultMaxDoublings;
    bool json = false;
  } l;
  auto* limit = app.add_subcommand(
      "limit", "Limit of the matrix powers, or a non-convergence diagnostic "
               "(exit 2)");
  limit->add_option("matrix", l.matrix, "Matrix file (.csv or .json)")
      ->required();
  limit->add_option("--row-tol", l.row_tol, "Allowed row-sum deviation")
      ->capture_default_str();
  limit->add_option("--tol", l.tol, "Convergence tolerance (infinity norm)")
      ->capture_default_str();
  limit
      ->add_option("--max-doublings", l.max_doublings,
                   "Maximum number of repeated squarings")
      ->capture_default_str();
  limit->add_flag("--json", l.json, "Machine-readable output");
  limit->callback([&] {
    rc = cmd_limit(l.matrix, l.row_tol, l.tol, l.max_doublings, l.json);
  });

  // stationary ----------------------------------------------------------
  struct {
    std::string matrix;
    std::string method = "linear";
    double row_tol = degroot::kDefaultRowTol;
    double tol = degroot::kDefaultLimitTol;
    int max_doublings = degroot::kDefaultMaxDoublings;
    bool json = false;
  } st;
  auto* stationary = app.add_subcommand(
      "stationary", "Stationary vector (final influence weights)");
  stationary->add_option("matrix", st.matrix, "Matrix file (.csv or .json)")
      ->required();
  stationary
      ->add_option("--method", st.method,
                   "linear (solve pi^T P = pi^T), trees (normalized spanning "
                   "out-tree weights), or power (matrix power limit)")
      ->check(CLI::IsMember({"linear", "trees", "power"}))
      ->capture_default_str();
  stationary->add_option("--row-tol", st.row_tol, "Allowed row-sum deviation")
      ->capture_default_str();
  stationary
      ->add_option("--tol", st.tol, "Convergence tolerance (power method)")
      ->capture_default_str();
  stationary
      ->add_option("--max-doublings", st.max_doublings,
                   "Maximum repeated squarings (power method)")
      ->capture_default_str();
  stationary->add_flag("--json", st.json, "Machine-readable output");
  stationary->callback([&] {
    rc = cmd_stationary(st.matrix, st.row_tol, st.method, st.tol,
                        st.max_doublings, st.json);
  });

  // synthesize ----------------------------------------------------------
  struct {
    std::string pi;
    std::string beta;
    std::string order;
    std::string out;
    std::string dot;
    bool json = false;
  } sy;
  auto* synthesize = app.add_subcommand(
      "synthesize", "Hamiltonian cycle with loops whose pooling limit "
                    "realizes a target weight vector");
  synthesize
      ->add_option("pi", sy.pi,
                   "Target weight vector file (.csv or .json); entries must "
                   "be positive and sum to 1")
      ->required();
  synthesize->add_option(
      "--beta", sy.beta,
      "Common product entering_weight[k] * pi[k]; decimal or fraction like "
      "10/101; default: min pi");
  synthesize->add_option(
      "--order", sy.order,
      "Visiting order as comma-separated 1-based vertices, e.g. 4,3,2,1; "
      "default: n,n-1,...,1");
  synthesize->add_option("--out", sy.out,
                         "Write the cycle's influence matrix to this file");
  synthesize->add_option("--dot", sy.dot,
                         "Write the cycle digraph (with loops) as DOT");
  synthesize->add_flag("--json", sy.json, "Machine-readable output");
  synthesize->callback([&] {
    rc = cmd_synthesize(sy.pi, sy.beta, sy.order, sy.out, sy.dot, sy.json);
  });

  // verify --------------------------------------------------------------
  struct {
    std::string a;
    std::string b;
    double row_tol = degroot::kDefaultRowTol;
    double tol = 1e-8;
    bool json = false;
  } ve;
  auto* verify = app.add_subcommand(
      "verify", "Do two procedures implement the same consensus map? "
                "(exit 0 equivalent, 1 not, 2 indeterminate)");
  verify->add_option("a", ve.a, "First matrix file")->required();
  verify->add_option("b", ve.b, "Second matrix file")->required();
  verify->add_option("--row-tol", ve.row_tol, "Allowed row-sum deviation")
      ->capture_default_str();
  verify->add_option("--tol", ve.tol, "Comparison tolerance on the limits")
      ->capture_default_str();
  verify->add_flag("--json", ve.json, "Machine-readable output");
  verify->callback(
      [&] { rc = cmd_verify(ve.a, ve.b, ve.row_tol, ve.tol, ve.json); });

  // simulate ------------------------------------------------------------
  struct {
    std::string matrix;
    std::string s0;
    int steps = 0;
    double row_tol = degroot::kDefaultRowTol;
    std::string out;
    bool json = false;
  } si;
  auto* simulate = app.add_subcommand(
      "simulate", "Opinion trajectory s(k) = P s(k-1) as CSV");
  simulate->add_option("matrix", si.matrix, "Matrix file (.csv or .json)")
      ->required();
  simulate->add_option("s0", si.s0, "Initial opinion vector file")->required();
  simulate->add_option("--steps", si.steps, "Number of pooling steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--row-tol", si.row_tol, "Allowed row-sum deviation")
      ->capture_default_str();
  simulate->add_option("--out", si.out, "Write the trajectory CSV here "
                                        "instead of stdout");
  simulate->add_flag("--json", si.json, "Machine-readable output");
  simulate->callback([&] {
    rc = cmd_simulate(si.matrix, si.s0, si.steps, si.row_tol, si.out, si.json);
  });

  // export-dot ----------------------------------------------------------
  struct {
    std::string matrix;
    double row_tol = degroot::kDefaultRowTol;
    double zero_tol = degroot::kDefaultZeroTol;
    bool show_loops = false;
    bool json = false;
  } ed;
  auto* export_dot = app.add_subcommand(
      "export-dot", "Communication digraph as GraphViz DOT");
  export_dot->add_option("matrix", ed.matrix, "Matrix file (.csv or .json)")
      ->required();
  export_dot->add_option("--row-tol", ed.row_tol, "Allowed row-sum deviation")
      ->capture_default_str();
  export_dot
      ->add_option("--zero-tol", ed.zero_tol,
                   "Entries at or below this threshold are treated as absent "
                   "arcs")
      ->capture_default_str();
  export_dot->add_flag("--show-loops", ed.show_loops,
                       "Include self-loops in the rendering");
  export_dot->add_flag("--json", ed.json, "Arc list as JSON instead of DOT");
  export_dot->callback([&] {
    rc = cmd_export_dot(ed.matrix, ed.row_tol, ed.zero_tol, ed.show_loops,
                        ed.json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const degroot::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const degroot::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const degroot::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
