#pragma once

#include <cmath>
#include <utility>

#include "degroot/digraph.hpp"
#include "degroot/matrix.hpp"
#include "degroot/stochastic.hpp"

namespace degroot {

inline constexpr double kStationaryPivotTol = 1e-12;

/// The unique stationary vector of P (left eigenvector for eigenvalue 1),
/// obtained from P^T - I with the first equation replaced by normalization.
/// Requires a single closed influence class (nu = 1); one refinement pass
/// keeps the solve accurate for weakly coupled chains.
inline ProbabilityVector stationary_vector(const StochasticMatrix& P) {
  const int n = P.size();
  const AnalysisReport rep = analyze(digraph_from_matrix(P));
  if (rep.nu != 1) throw NotUnique(rep.nu);

  Matrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = P(j, i) - (i == j ? 1.0 : 0.0);
  for (int j = 0; j < n; ++j) a(0, j) = 1.0;
  Vector b(static_cast<std::size_t>(n), 0.0);
  b[0] = 1.0;

  const LuDecomposition lu(a);
  if (lu.singular() || lu.min_pivot() <= kStationaryPivotTol)
    throw SingularSystem("stationary solve: pivot " +
                         std::to_string(lu.min_pivot()) +
                         " below tolerance");
  Vector x = lu.solve(b);
  Vector r(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) s -= a(i, j) * x[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  const Vector dx = lu.solve(r);
  for (int i = 0; i < n; ++i)
    x[static_cast<std::size_t>(i)] += dx[static_cast<std::size_t>(i)];

  for (double& v : x) {
    if (v < 0.0) {
      if (v < -kDefaultRowTol)
        throw SingularSystem("stationary solve produced component " +
                             std::to_string(v));
      v = 0.0;
    }
  }
  return ProbabilityVector(std::move(x));
}

}  // namespace degroot
