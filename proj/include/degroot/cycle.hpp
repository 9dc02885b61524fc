#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "degroot/digraph.hpp"
#include "degroot/stochastic.hpp"

namespace degroot {

inline constexpr double kBetaSlack = 1e-12;        // relative
inline constexpr double kWeightAboveOneTol = 1e-12;

// Weighted Hamiltonian cycle with loops. order lists the visiting order:
// arcs run order[0] -> order[1] -> ... -> order[n-1] -> order[0].
// entering_weight[k] is the weight of the unique non-loop arc entering
// vertex k; loop_weight[k] completes row k to 1 when the cycle is meant as a
// communication digraph, and is 0 otherwise.
struct CycleSpec {
  int n = 0;
  std::vector<int> order;
  Vector entering_weight;
  Vector loop_weight;
  std::optional<double> beta;
};

// The canonical visiting order n -> n-1 -> ... -> 1 -> n (0-based).
inline std::vector<int> default_cycle_order(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = n - 1 - i;
  return order;
}

namespace detail {

inline void check_order(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n)
    throw InvalidOrder("order has " + std::to_string(order.size()) +
                       " entries, expected " + std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : order) {
    if (v < 0 || v >= n)
      throw InvalidOrder("order entry " + std::to_string(v) +
                         " out of range [0, " + std::to_string(n) + ")");
    if (seen[static_cast<std::size_t>(v)])
      throw InvalidOrder("order repeats vertex " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace detail

/// The unique weighted Hamiltonian cycle whose spanning out-tree weight
/// vector equals q: the arc entering vertex k gets weight
/// (prod q)^(1/(n-1)) / q_k, computed in log space. The visiting order does
/// not change the weights, only which arcs exist.
inline CycleSpec cycle_from_tree_weights(const Vector& q,
                                         std::vector<int> order = {}) {
  const int n = static_cast<int>(q.size());
  if (n < 2) throw DegenerateN(n);
  for (int k = 0; k < n; ++k)
    if (!std::isfinite(q[static_cast<std::size_t>(k)]) ||
        q[static_cast<std::size_t>(k)] <= 0.0)
      throw NonPositiveTarget(k, q[static_cast<std::size_t>(k)]);
  if (order.empty()) order = default_cycle_order(n);
  detail::check_order(order, n);

  double log_sum = 0.0;
  for (double qk : q) log_sum += std::log(qk);
  const double log_mean = log_sum / (n - 1);

  CycleSpec spec;
  spec.n = n;
  spec.order = std::move(order);
  spec.entering_weight.resize(static_cast<std::size_t>(n));
  spec.loop_weight.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k)
    spec.entering_weight[static_cast<std::size_t>(k)] =
        std::exp(log_mean - std::log(q[static_cast<std::size_t>(k)]));
  return spec;
}

/// Stochastic Hamiltonian cycle with loops realizing pi as the final weight
/// distribution: the arc entering vertex k gets weight beta / pi_k and the
/// loop absorbs the rest. Any beta in (0, min pi] is admissible; the default
/// is min pi, which leaves at least one vertex loop-free.
inline CycleSpec cycle_from_pi(const ProbabilityVector& pi,
                               std::optional<double> beta = std::nullopt,
                               std::vector<int> order = {}) {
  const int n = pi.size();
  for (int k = 0; k < n; ++k)
    if (pi[k] <= 0.0) throw NonPositivePi(k, pi[k]);
  const double min_pi = pi.min();
  const double b = beta.value_or(min_pi);
  if (!std::isfinite(b) || b <= 0.0 || b > min_pi * (1.0 + kBetaSlack))
    throw BetaOutOfRange(b, min_pi);
  if (order.empty()) order = default_cycle_order(n);
  detail::check_order(order, n);

  CycleSpec spec;
  spec.n = n;
  spec.order = std::move(order);
  spec.beta = b;
  spec.entering_weight.resize(static_cast<std::size_t>(n));
  spec.loop_weight.resize(static_cast<std::size_t>(n));
  if (n == 1) {
    // Degenerate cycle: the single arc is the loop itself.
    spec.entering_weight[0] = 1.0;
    spec.loop_weight[0] = 0.0;
    return spec;
  }
  for (int k = 0; k < n; ++k) {
    const double x = std::min(1.0, b / pi[k]);
    spec.entering_weight[static_cast<std::size_t>(k)] = x;
    spec.loop_weight[static_cast<std::size_t>(k)] = 1.0 - x;
  }
  return spec;
}

/// Influence matrix of the cycle: row k carries entering_weight[k] on the
/// predecessor of k in the visiting order and loop_weight[k] on the
/// diagonal. Requires entering weights at most 1; the rows must already
/// complete to 1 for the result to validate.
inline StochasticMatrix cycle_to_matrix(const CycleSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw Error("cycle spec is empty");
  detail::check_order(spec.order, n);
  if (static_cast<int>(spec.entering_weight.size()) != n ||
      static_cast<int>(spec.loop_weight.size()) != n)
    throw DimensionMismatch("cycle spec weight arrays do not match n");
  for (int k = 0; k < n; ++k) {
    const double x = spec.entering_weight[static_cast<std::size_t>(k)];
    if (x > 1.0 + kWeightAboveOneTol) throw WeightAboveOne(k, x);
    if (spec.loop_weight[static_cast<std::size_t>(k)] < 0.0)
      throw Error("negative loop weight at vertex " + std::to_string(k));
  }
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    const int tail = spec.order[static_cast<std::size_t>(i)];
    const int head = spec.order[static_cast<std::size_t>((i + 1) % n)];
    m(head, tail) +=
        std::min(1.0, spec.entering_weight[static_cast<std::size_t>(head)]);
  }
  for (int v = 0; v < n; ++v)
    m(v, v) += spec.loop_weight[static_cast<std::size_t>(v)];
  return validate_stochastic(std::move(m));
}

/// The cycle as a weighted digraph (cycle arcs plus any positive loops).
/// Unlike cycle_to_matrix this accepts non-stochastic cycles, e.g. the
/// loop-free ones produced by cycle_from_tree_weights.
inline WeightedDigraph cycle_to_digraph(const CycleSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw Error("cycle spec is empty");
  detail::check_order(spec.order, n);
  WeightedDigraph g(n);
  for (int i = 0; i < n; ++i) {
    const int tail = spec.order[static_cast<std::size_t>(i)];
    const int head = spec.order[static_cast<std::size_t>((i + 1) % n)];
    g.add_arc(tail, head,
              spec.entering_weight[static_cast<std::size_t>(head)]);
  }
  for (int v = 0; v < n; ++v) {
    const double loop = spec.loop_weight[static_cast<std::size_t>(v)];
    if (loop > 0.0 && !g.has_arc(v, v)) g.add_arc(v, v, loop);
  }
  return g;
}

struct EquivalenceReport {
  enum class Verdict { equivalent, not_equivalent, indeterminate };

  bool a_converges = false;
  bool b_converges = false;
  bool a_consensus = false;  // limit exists with identical rows
  bool b_consensus = false;
  std::optional<double> limit_distance;   // inf norm of the limit difference
  std::optional<double> weight_distance;  // max entry gap between the
                                          // stationary rows
  Verdict verdict = Verdict::indeterminate;
};

namespace detail {

inline bool rows_identical(const Matrix& m, double tol) {
  for (int i = 1; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (std::abs(m(i, j) - m(0, j)) > tol) return false;
  return true;
}

}  // namespace detail

/// Do two pooling procedures implement the same consensus map? Compares the
/// power limits: both must exist, be rank one (identical rows), and carry
/// the same stationary row within tol.
inline EquivalenceReport verify_equivalence(const StochasticMatrix& a,
                                            const StochasticMatrix& b,
                                            double tol = 1e-8) {
  if (a.size() != b.size())
    throw DimensionMismatch("verify_equivalence: " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
  const LimitResult ra = limit_powers(a);
  const LimitResult rb = limit_powers(b);

  EquivalenceReport rep;
  rep.a_converges = ra.converged();
  rep.b_converges = rb.converged();
  if (!rep.a_converges || !rep.b_converges) return rep;

  rep.limit_distance = inf_norm(ra.limit - rb.limit);
  rep.a_consensus = detail::rows_identical(ra.limit, tol);
  rep.b_consensus = detail::rows_identical(rb.limit, tol);
  if (!rep.a_consensus || !rep.b_consensus) {
    rep.verdict = EquivalenceReport::Verdict::not_equivalent;
    return rep;
  }
  double wd = 0.0;
  for (int j = 0; j < a.size(); ++j)
    wd = std::max(wd, std::abs(ra.limit(0, j) - rb.limit(0, j)));
  rep.weight_distance = wd;
  rep.verdict = wd <= tol ? EquivalenceReport::Verdict::equivalent
                          : EquivalenceReport::Verdict::not_equivalent;
  return rep;
}

}  // namespace degroot
