#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "degroot/digraph.hpp"
#include "degroot/matrix.hpp"
#include "degroot/stochastic.hpp"

namespace degroot {

inline constexpr int kEnumerationBound = 8;
inline constexpr long long kEnumerationComboGuard = 10'000'000;

// Spanning out-tree weights per root, their total, and the normalized
// distribution (defined only when at least one spanning out-tree exists).
struct ForestWeights {
  Vector per_root;
  double total = 0.0;
  std::optional<ProbabilityVector> normalized;

  const ProbabilityVector& normalized_weights() const {
    if (!normalized) throw NoSpanningTree();
    return *normalized;
  }
};

namespace detail {

// Incoming non-loop arcs per vertex, as (tail, weight) pairs.
inline std::vector<std::vector<std::pair<int, double>>> incoming_arcs(
    const WeightedDigraph& g) {
  std::vector<std::vector<std::pair<int, double>>> in(
      static_cast<std::size_t>(g.size()));
  for (const Arc& a : g.arcs())
    if (a.tail != a.head)
      in[static_cast<std::size_t>(a.head)].emplace_back(a.tail, a.weight);
  return in;
}

// Walks parent pointers from v; returns the parentless end of the chain.
inline int chain_root(const std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] >= 0)
    v = parent[static_cast<std::size_t>(v)];
  return v;
}

// True if assigning "tail" as v's parent would close a directed cycle.
inline bool closes_cycle(const std::vector<int>& parent, int v, int tail) {
  int u = tail;
  while (u >= 0) {
    if (u == v) return true;
    u = parent[static_cast<std::size_t>(u)];
  }
  return false;
}

inline ForestWeights finish_forest_weights(Vector per_root) {
  ForestWeights fw;
  for (double& t : per_root) {
    // Principal minors may round to a tiny negative where the exact value
    // is zero.
    if (t < 0.0 && t > -kDefaultRowTol) t = 0.0;
  }
  fw.total = 0.0;
  for (double t : per_root) fw.total += t;
  fw.per_root = std::move(per_root);
  if (fw.total > 0.0) {
    Vector norm = fw.per_root;
    for (double& t : norm) t /= fw.total;
    fw.normalized.emplace(std::move(norm));
  }
  return fw;
}

}  // namespace detail

/// Total weight of spanning out-trees rooted at root: every other vertex
/// picks exactly one incoming non-loop arc and no directed cycle may appear.
/// Brute force; refuses digraphs beyond the enumeration bound.
inline double enumerate_out_trees(const WeightedDigraph& g, int root) {
  const int n = g.size();
  if (root < 0 || root >= n)
    throw Error("root " + std::to_string(root) + " out of range");
  if (n > kEnumerationBound)
    throw TooLarge("enumeration bound is " + std::to_string(kEnumerationBound) +
                   " vertices, digraph has " + std::to_string(n));
  if (n == 1) return 1.0;

  const auto in = detail::incoming_arcs(g);
  std::vector<int> verts;
  long long combos = 1;
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    if (in[static_cast<std::size_t>(v)].empty()) return 0.0;
    verts.push_back(v);
    combos *= static_cast<long long>(in[static_cast<std::size_t>(v)].size());
    if (combos > kEnumerationComboGuard)
      throw TooLarge("more than " + std::to_string(kEnumerationComboGuard) +
                     " incoming-arc combinations");
  }

  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  double total = 0.0;
  auto dfs = [&](auto&& self, std::size_t idx, double product) -> void {
    if (idx == verts.size()) {
      total += product;
      return;
    }
    const int v = verts[idx];
    for (const auto& [tail, w] : in[static_cast<std::size_t>(v)]) {
      if (detail::closes_cycle(parent, v, tail)) continue;
      parent[static_cast<std::size_t>(v)] = tail;
      self(self, idx + 1, product * w);
      parent[static_cast<std::size_t>(v)] = -1;
    }
  };
  dfs(dfs, 0, 1.0);
  return total;
}

/// Tree weight vector by brute-force enumeration: per_root[j] is the total
/// weight of spanning out-trees rooted at j.
inline ForestWeights tree_weight_vector(const WeightedDigraph& g) {
  Vector per_root(static_cast<std::size_t>(g.size()), 0.0);
  for (int j = 0; j < g.size(); ++j)
    per_root[static_cast<std::size_t>(j)] = enumerate_out_trees(g, j);
  return detail::finish_forest_weights(std::move(per_root));
}

/// Tree weight vector by the matrix tree theorem: per_root[j] is the
/// principal minor of the Kirchhoff matrix with row and column j deleted.
/// Works for any size the dense determinant can handle.
inline ForestWeights tree_weights_via_minors(const WeightedDigraph& g) {
  const int n = g.size();
  const Matrix l = kirchhoff(g);
  Vector per_root(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    Matrix minor(n - 1);
    for (int r = 0, mr = 0; r < n; ++r) {
      if (r == j) continue;
      for (int c = 0, mc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(mr, mc) = l(r, c);
        ++mc;
      }
      ++mr;
    }
    per_root[static_cast<std::size_t>(j)] =
        LuDecomposition(std::move(minor)).determinant();
  }
  return detail::finish_forest_weights(std::move(per_root));
}

struct ForestMatrix {
  Matrix entries;           // row i: where vertex i ends up, by root
  int forest_dimension = 0; // arcs in a maximum out-forest
};

/// Normalized matrix of maximum out-forests. Enumerates all spanning
/// out-forests with the maximum number of arcs; entry (i, j) is the weight
/// share of forests in which vertex i belongs to the tree rooted at j.
inline ForestMatrix max_out_forest_matrix(const WeightedDigraph& g) {
  const int n = g.size();
  if (n > kEnumerationBound)
    throw TooLarge("enumeration bound is " + std::to_string(kEnumerationBound) +
                   " vertices, digraph has " + std::to_string(n));
  const auto in = detail::incoming_arcs(g);
  long long combos = 1;
  for (int v = 0; v < n; ++v) {
    combos *= static_cast<long long>(in[static_cast<std::size_t>(v)].size()) + 1;
    if (combos > kEnumerationComboGuard)
      throw TooLarge("more than " + std::to_string(kEnumerationComboGuard) +
                     " incoming-arc combinations");
  }

  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  int best_arcs = -1;
  double total = 0.0;
  Matrix acc(n);
  auto record = [&](double product) {
    total += product;
    for (int i = 0; i < n; ++i)
      acc(i, detail::chain_root(parent, i)) += product;
  };
  auto dfs = [&](auto&& self, int v, int arcs, double product) -> void {
    if (arcs + (n - v) < best_arcs) return;  // cannot reach the maximum
    if (v == n) {
      if (arcs > best_arcs) {
        best_arcs = arcs;
        total = 0.0;
        acc = Matrix(n);
      }
      if (arcs == best_arcs) record(product);
      return;
    }
    self(self, v + 1, arcs, product);  // v stays a root
    for (const auto& [tail, w] : in[static_cast<std::size_t>(v)]) {
      if (detail::closes_cycle(parent, v, tail)) continue;
      parent[static_cast<std::size_t>(v)] = tail;
      self(self, v + 1, arcs + 1, product * w);
      parent[static_cast<std::size_t>(v)] = -1;
    }
  };
  dfs(dfs, 0, 0, 1.0);

  ForestMatrix fm;
  fm.forest_dimension = best_arcs;
  fm.entries = Matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fm.entries(i, j) = acc(i, j) / total;
  return fm;
}

}  // namespace degroot
