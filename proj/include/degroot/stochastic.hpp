#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "degroot/matrix.hpp"

namespace degroot {

inline constexpr double kDefaultRowTol = 1e-9;
inline constexpr double kDefaultLimitTol = 1e-12;
inline constexpr int kDefaultMaxDoublings = 60;

// Opinions are plain real vectors; entries must be finite where consumed.
using OpinionVector = Vector;

namespace detail {

// Scales x to unit sum, then replaces the last positive entry by 1 minus
// the float prefix sum before it, which makes the left-to-right float sum
// land on exactly 1.0: a prefix in [0.5, 2] cancels exactly against 1
// (Sterbenz), a smaller prefix leaves a residual under half an ulp of 1,
// and trailing exact zeros never move the sum. A row that already sums to
// exactly 1.0 is returned untouched, so the operation is idempotent. In
// the degenerate case where the correction would flip the entry's sign
// (trailing entry below the rounding noise of the rest of the row), fall
// back to folding the residual into the largest entry.
inline void renormalize_unit_sum(double* x, int n) {
  auto sum = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += x[i];
    return s;
  };
  if (sum() == 1.0) return;
  const double s = sum();
  for (int i = 0; i < n; ++i) x[i] /= s;
  int last = n - 1;
  while (last >= 0 && x[last] == 0.0) --last;
  if (last >= 0) {
    double prefix = 0.0;
    for (int i = 0; i < last; ++i) prefix += x[i];
    const double correction = 1.0 - prefix;
    if (correction > 0.0) {
      x[last] = correction;
      return;
    }
  }
  for (int round = 0; round < 8; ++round) {
    const double s2 = sum();
    if (s2 == 1.0) break;
    int imax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(x[i]) > std::abs(x[imax])) imax = i;
    x[imax] -= s2 - 1.0;
  }
}

}  // namespace detail

// Row stochastic influence matrix. Construction goes through
// validate_stochastic, which renormalizes every row to unit sum.
class StochasticMatrix {
 public:
  const Matrix& matrix() const { return m_; }
  int size() const { return m_.size(); }
  double operator()(int i, int j) const { return m_(i, j); }

  bool operator==(const StochasticMatrix&) const = default;

 private:
  friend StochasticMatrix validate_stochastic(Matrix raw, double row_tol);
  explicit StochasticMatrix(Matrix m) : m_(std::move(m)) {}

  Matrix m_;
};

/// Checks nonnegativity and row sums (within row_tol of 1), then renormalizes
/// each row to exact unit sum.
inline StochasticMatrix validate_stochastic(Matrix raw,
                                            double row_tol = kDefaultRowTol) {
  const int n = raw.size();
  if (n < 1) throw Error("stochastic matrix must have at least one row");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(raw(i, j))) throw NonFiniteEntry(i, j);
      if (raw(i, j) < 0.0) throw NegativeEntry(i, j, raw(i, j));
    }
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += raw(i, j);
    if (std::abs(s - 1.0) > row_tol) throw RowSumOutOfTolerance(i, s);
    detail::renormalize_unit_sum(&raw(i, 0), n);
  }
  return StochasticMatrix(std::move(raw));
}

// Probability vector: nonnegative entries summing to 1 (renormalized to exact
// unit sum on construction).
class ProbabilityVector {
 public:
  explicit ProbabilityVector(Vector v, double sum_tol = kDefaultRowTol)
      : v_(std::move(v)) {
    const int n = static_cast<int>(v_.size());
    if (n < 1) throw Error("probability vector must be nonempty");
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!std::isfinite(v_[i])) throw NonFiniteEntry(i, 0);
      if (v_[i] < 0.0) throw NegativeEntry(i, 0, v_[i]);
      s += v_[i];
    }
    if (std::abs(s - 1.0) > sum_tol)
      throw Error("probability vector sums to " + std::to_string(s) +
                  ", not 1");
    detail::renormalize_unit_sum(v_.data(), n);
  }

  const Vector& values() const { return v_; }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(v_.size()); }

  double min() const {
    double m = v_[0];
    for (double x : v_) m = std::min(m, x);
    return m;
  }

  bool operator==(const ProbabilityVector&) const = default;

 private:
  Vector v_;
};

/// Opinion trajectory [s(0), s(1), ..., s(steps)] under s(k) = P s(k-1).
inline std::vector<OpinionVector> iterate_opinions(const StochasticMatrix& P,
                                                   const OpinionVector& s0,
                                                   int steps) {
  if (static_cast<int>(s0.size()) != P.size())
    throw DimensionMismatch("opinion vector has " + std::to_string(s0.size()) +
                            " entries, matrix is " + std::to_string(P.size()));
  for (int i = 0; i < P.size(); ++i)
    if (!std::isfinite(s0[static_cast<std::size_t>(i)]))
      throw NonFiniteEntry(i, 0);
  if (steps < 0) throw Error("steps must be nonnegative");
  std::vector<OpinionVector> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  out.push_back(s0);
  for (int k = 1; k <= steps; ++k) out.push_back(P.matrix() * out.back());
  return out;
}

struct LimitResult {
  enum class Status { converged, not_converged };

  Status status = Status::not_converged;
  Matrix limit;          // best candidate for the power limit
  double residual = 0.0; // inf norm of (limit * P - limit)
  int doublings_used = 0;

  bool converged() const { return status == Status::converged; }
};

/// Power limit of P by repeated squaring. Squaring stops once successive
/// squares agree within tol; the candidate then counts as converged only if
/// one further multiplication by P leaves it in place, which rejects
/// even-period oscillations that squaring alone stabilizes.
inline LimitResult limit_powers(const StochasticMatrix& P,
                                double tol = kDefaultLimitTol,
                                int max_doublings = kDefaultMaxDoublings) {
  if (tol <= 0.0) throw Error("tol must be positive");
  if (max_doublings < 1) throw Error("max_doublings must be at least 1");
  LimitResult res;
  Matrix q = P.matrix();
  while (res.doublings_used < max_doublings) {
    Matrix next = q * q;
    ++res.doublings_used;
    const double diff = inf_norm(next - q);
    q = std::move(next);
    if (diff <= tol) break;
  }
  res.residual = inf_norm(q * P.matrix() - q);
  res.status = res.residual <= tol ? LimitResult::Status::converged
                                   : LimitResult::Status::not_converged;
  res.limit = std::move(q);
  return res;
}

/// Consensus value: inner product of the final weight distribution with the
/// initial opinions.
inline double consensus_value(const ProbabilityVector& pi,
                              const OpinionVector& s0) {
  return dot(pi.values(), s0);
}

}  // namespace degroot
