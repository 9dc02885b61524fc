#pragma once

// Shared test fixtures: the four-agent sample procedure, seeded random
// generators, file helpers, and (for the CLI suites) a subprocess runner.

#include <gtest/gtest.h>

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <degroot/degroot.hpp>

#ifdef DEGROOT_CLI
#include <sys/wait.h>
#endif

namespace testsupport {

// Four-agent influence structure used as the running sample. Its stationary
// vector is (45, 36, 10, 10)/101.
inline degroot::Matrix influence4_raw() {
  return degroot::Matrix::from_rows({
      {0.9, 0.1, 0.0, 0.0},
      {0.0, 0.75, 0.25, 0.0},
      {0.25, 0.3, 0.1, 0.35},
      {0.2, 0.15, 0.0, 0.65},
  });
}

inline degroot::StochasticMatrix influence4() {
  return degroot::validate_stochastic(influence4_raw());
}

inline degroot::Vector influence4_pi() {
  return {45.0 / 101.0, 36.0 / 101.0, 10.0 / 101.0, 10.0 / 101.0};
}

inline std::string influence4_csv() {
  return "0.9,0.1,0,0\n0,0.75,0.25,0\n0.25,0.3,0.1,0.35\n0.2,0.15,0,0.65\n";
}

// Random row-stochastic matrix with sparse support (each row keeps a random
// nonempty subset of columns). Entries stay bounded away from zero so power
// limits converge well within the doubling budget.
inline degroot::StochasticMatrix random_stochastic(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  std::bernoulli_distribution keep(0.5);
  std::uniform_int_distribution<int> pick(0, n - 1);
  degroot::Matrix m(n);
  for (int i = 0; i < n; ++i) {
    bool any = false;
    for (int j = 0; j < n; ++j)
      if (keep(rng)) {
        m(i, j) = unif(rng);
        any = true;
      }
    if (!any) m(i, pick(rng)) = 1.0;
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += m(i, j);
    for (int j = 0; j < n; ++j) m(i, j) /= s;
  }
  return degroot::validate_stochastic(m);
}

// Random weighted digraph (no loops) with arc probability p.
inline degroot::WeightedDigraph random_digraph(std::mt19937& rng, int n,
                                               double p = 0.5) {
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  std::bernoulli_distribution keep(p);
  degroot::WeightedDigraph g(n);
  for (int tail = 0; tail < n; ++tail)
    for (int head = 0; head < n; ++head)
      if (tail != head && keep(rng)) g.add_arc(tail, head, unif(rng));
  return g;
}

// Random positive probability vector with entries bounded away from zero.
inline degroot::ProbabilityVector random_pi(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  degroot::Vector v(static_cast<std::size_t>(n));
  double s = 0.0;
  for (double& x : v) {
    x = unif(rng);
    s += x;
  }
  for (double& x : v) x /= s;
  return degroot::ProbabilityVector(std::move(v));
}

inline std::vector<int> random_order(std::mt19937& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// Random positive target tree-weight vector, log-uniform in [0.1, 10].
inline degroot::Vector random_targets(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> logu(-1.0, 1.0);
  degroot::Vector q(static_cast<std::size_t>(n));
  for (double& x : q) x = std::pow(10.0, logu(rng));
  return q;
}

// Unique per call: parallel test processes share the temp directory, so a
// fixed name would let concurrent tests clobber each other's files.
inline std::string temp_path(const std::string& name) {
  static std::atomic<int> counter{0};
  const std::size_t dot = name.find_last_of('.');
  const std::string stem =
      dot == std::string::npos ? name : name.substr(0, dot);
  const std::string ext = dot == std::string::npos ? "" : name.substr(dot);
  return ::testing::TempDir() + stem + '_' + std::to_string(::getpid()) +
         '_' + std::to_string(counter.fetch_add(1)) + ext;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  ASSERT_TRUE(out.good()) << "cannot write " << path;
  out << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in.good()) << "cannot read " << path;
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

inline double max_abs_diff(const degroot::Vector& a, const degroot::Vector& b) {
  EXPECT_EQ(a.size(), b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

#ifdef DEGROOT_CLI
struct CliResult {
  int code = -1;
  std::string out;
};

// Runs the installed command-line binary with the given argument string,
// capturing stdout; stderr is discarded.
inline CliResult run_cli(const std::string& args) {
  CliResult r;
  const std::string cmd = std::string(DEGROOT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
#endif

}  // namespace testsupport
