#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "degroot/stochastic.hpp"

namespace degroot {

inline constexpr double kDefaultZeroTol = 0.0;
inline constexpr double kFeasibilityTol = 1e-12;
inline constexpr double kLoopConsistencyTol = 1e-9;

// Period value reported for a strong component that has no directed cycle
// (a loopless single vertex).
inline constexpr int kNoPeriod = 0;

struct Arc {
  int tail = 0;
  int head = 0;
  double weight = 0.0;

  bool operator==(const Arc&) const = default;
};

// Weighted digraph on vertices 0..n-1, arcs oriented in the direction of
// influence. Positive weights only; at most one arc per ordered pair; loops
// permitted.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(int n)
      : n_(n), index_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                      -1) {
    if (n < 1) throw Error("digraph must have at least one vertex");
  }

  int size() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  void add_arc(int tail, int head, double weight) {
    check_vertex(tail);
    check_vertex(head);
    if (!(weight > 0.0) || !std::isfinite(weight))
      throw Error("arc weight must be positive and finite, got " +
                  std::to_string(weight));
    int& slot = index_[key(tail, head)];
    if (slot >= 0)
      throw Error("duplicate arc " + std::to_string(tail) + " -> " +
                  std::to_string(head));
    slot = static_cast<int>(arcs_.size());
    arcs_.push_back({tail, head, weight});
  }

  bool has_arc(int tail, int head) const {
    check_vertex(tail);
    check_vertex(head);
    return index_[key(tail, head)] >= 0;
  }

  // 0 when the arc is absent.
  double weight(int tail, int head) const {
    check_vertex(tail);
    check_vertex(head);
    const int slot = index_[key(tail, head)];
    return slot >= 0 ? arcs_[static_cast<std::size_t>(slot)].weight : 0.0;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw Error("vertex " + std::to_string(v) + " out of range [0, " +
                  std::to_string(n_) + ")");
  }
  std::size_t key(int tail, int head) const {
    return static_cast<std::size_t>(tail) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(head);
  }

  int n_;
  std::vector<Arc> arcs_;
  std::vector<int> index_;
};

/// Communication digraph of P: arc (j -> i) with weight p_ij for every entry
/// above zero_tol. Influence runs from tail to head.
inline WeightedDigraph digraph_from_matrix(const StochasticMatrix& P,
                                           double zero_tol = kDefaultZeroTol) {
  if (zero_tol < 0.0) throw Error("zero_tol must be nonnegative");
  WeightedDigraph g(P.size());
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < P.size(); ++j)
      if (P(i, j) > zero_tol) g.add_arc(j, i, P(i, j));
  return g;
}

/// Inverse of digraph_from_matrix: p_ij = weight of arc (j -> i). Missing
/// loops are completed to make rows stochastic; explicit loops must agree
/// with that completion.
inline StochasticMatrix matrix_from_digraph(const WeightedDigraph& g) {
  const int n = g.size();
  Matrix m(n);
  Vector incoming(static_cast<std::size_t>(n), 0.0);
  for (const Arc& a : g.arcs()) {
    if (a.tail == a.head) continue;
    m(a.head, a.tail) = a.weight;
    incoming[static_cast<std::size_t>(a.head)] += a.weight;
  }
  for (int i = 0; i < n; ++i) {
    const double in = incoming[static_cast<std::size_t>(i)];
    if (in > 1.0 + kFeasibilityTol) throw InfeasibleRow(i, in);
    // A vertex whose incoming weight already reaches one (within row
    // tolerance) needs no loop; snapping the float residue to zero keeps
    // matrix -> digraph -> matrix round trips entrywise identical.
    double completion = 1.0 - in;
    if (std::abs(completion) <= kDefaultRowTol) completion = 0.0;
    completion = std::max(0.0, completion);
    if (g.has_arc(i, i)) {
      const double loop = g.weight(i, i);
      if (std::abs(loop - completion) > kLoopConsistencyTol)
        throw InconsistentLoop(i, loop, completion);
      m(i, i) = loop;
    } else {
      m(i, i) = completion;
    }
  }
  return validate_stochastic(std::move(m));
}

/// Kirchhoff matrix of g: off-diagonal l_ij = -w_ji, diagonal l_ii = total
/// weight entering i. Loops do not contribute.
inline Matrix kirchhoff(const WeightedDigraph& g) {
  const int n = g.size();
  Matrix l(n);
  for (const Arc& a : g.arcs()) {
    if (a.tail == a.head) continue;
    l(a.head, a.tail) = -a.weight;
    l(a.head, a.head) += a.weight;
  }
  return l;
}

/// Strongly connected components, each sorted ascending, components ordered
/// by their smallest vertex. Weights are ignored.
inline std::vector<std::vector<int>> strong_components(
    const WeightedDigraph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Arc& a : g.arcs())
    adj[static_cast<std::size_t>(a.tail)].push_back(a.head);

  // Tarjan's algorithm.
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  auto dfs = [&](auto&& self, int v) -> void {
    index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] =
        next_index++;
    stack.push_back(v);
    on_stack[static_cast<std::size_t>(v)] = true;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (index[static_cast<std::size_t>(w)] < 0) {
        self(self, w);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)],
                     low[static_cast<std::size_t>(w)]);
      } else if (on_stack[static_cast<std::size_t>(w)]) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)],
                     index[static_cast<std::size_t>(w)]);
      }
    }
    if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
      std::vector<int> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[static_cast<std::size_t>(v)] < 0) dfs(dfs, v);

  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

struct AnalysisReport {
  std::vector<std::vector<int>> components;
  std::vector<bool> basic;   // per component: no arcs enter it from outside
  int nu = 0;                // number of basic components
  int b = 0;                 // number of basic vertices
  std::vector<int> periods;  // per component; kNoPeriod for loopless singletons
  bool has_spanning_out_tree = false;
  bool regular = false;
  bool limit_exists = false;
};

/// Full structural analysis: strong components, basic flags, periods, and the
/// convergence/regularity criteria they imply.
inline AnalysisReport analyze(const WeightedDigraph& g) {
  const int n = g.size();
  AnalysisReport rep;
  rep.components = strong_components(g);
  const int nc = static_cast<int>(rep.components.size());

  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < nc; ++c)
    for (int v : rep.components[static_cast<std::size_t>(c)])
      comp_of[static_cast<std::size_t>(v)] = c;

  rep.basic.assign(static_cast<std::size_t>(nc), true);
  for (const Arc& a : g.arcs()) {
    const int ct = comp_of[static_cast<std::size_t>(a.tail)];
    const int ch = comp_of[static_cast<std::size_t>(a.head)];
    if (ct != ch) rep.basic[static_cast<std::size_t>(ch)] = false;
  }
  for (int c = 0; c < nc; ++c) {
    if (rep.basic[static_cast<std::size_t>(c)]) {
      ++rep.nu;
      rep.b += static_cast<int>(rep.components[static_cast<std::size_t>(c)].size());
    }
  }

  // Period of a component: gcd over its internal arcs (u -> v) of
  // level(u) + 1 - level(v) for a breadth-first leveling. Loops contribute 1.
  rep.periods.assign(static_cast<std::size_t>(nc), kNoPeriod);
  std::vector<int> level(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Arc& a : g.arcs())
    adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
  for (int c = 0; c < nc; ++c) {
    const auto& comp = rep.components[static_cast<std::size_t>(c)];
    if (comp.size() == 1) {
      const int v = comp.front();
      rep.periods[static_cast<std::size_t>(c)] =
          g.has_arc(v, v) ? 1 : kNoPeriod;
      continue;
    }
    std::vector<int> queue{comp.front()};
    level[static_cast<std::size_t>(comp.front())] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (comp_of[static_cast<std::size_t>(v)] != c) continue;
        if (level[static_cast<std::size_t>(v)] < 0) {
          level[static_cast<std::size_t>(v)] =
              level[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    int period = 0;
    for (const Arc& a : g.arcs()) {
      if (comp_of[static_cast<std::size_t>(a.tail)] != c ||
          comp_of[static_cast<std::size_t>(a.head)] != c)
        continue;
      const int d = level[static_cast<std::size_t>(a.tail)] + 1 -
                    level[static_cast<std::size_t>(a.head)];
      period = std::gcd(period, d);
    }
    rep.periods[static_cast<std::size_t>(c)] = period;
    for (int v : comp) level[static_cast<std::size_t>(v)] = -1;
  }

  rep.has_spanning_out_tree = rep.nu == 1;
  rep.limit_exists = true;
  for (int c = 0; c < nc; ++c)
    if (rep.basic[static_cast<std::size_t>(c)] &&
        rep.periods[static_cast<std::size_t>(c)] != 1)
      rep.limit_exists = false;
  rep.regular = rep.nu == 1 && rep.limit_exists;
  return rep;
}

}  // namespace degroot
