#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "degroot/errors.hpp"

namespace degroot {

using Vector = std::vector<double>;

inline constexpr double kDefaultPivotTol = 1e-10;

// Dense square matrix of doubles, row major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0)
      : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                  fill) {
    if (n < 0) throw Error("matrix dimension must be nonnegative");
  }

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  // Builds a matrix from explicit rows; rejects ragged or non-square input
  // and non-finite entries.
  static Matrix from_rows(const std::vector<Vector>& rows) {
    const int n = static_cast<int>(rows.size());
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) {
        throw NotSquare("row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
      }
      for (int j = 0; j < n; ++j) {
        if (!std::isfinite(rows[i][j])) throw NonFiniteEntry(i, j);
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  int size() const { return n_; }

  double& operator()(int i, int j) { return a_[idx(i, j)]; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }

  Vector row(int i) const {
    Vector r(n_);
    for (int j = 0; j < n_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> a_;
};

inline Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("matrix product: " + std::to_string(x.size()) +
                            " vs " + std::to_string(y.size()));
  const int n = x.size();
  Matrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double xik = x(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
    }
  }
  return out;
}

inline Vector operator*(const Matrix& m, const Vector& v) {
  if (m.size() != static_cast<int>(v.size()))
    throw DimensionMismatch("matrix-vector product: " +
                            std::to_string(m.size()) + " vs " +
                            std::to_string(v.size()));
  const int n = m.size();
  Vector out(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("matrix difference: " + std::to_string(x.size()) +
                            " vs " + std::to_string(y.size()));
  const int n = x.size();
  Matrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = x(i, j) - y(i, j);
  return out;
}

// Induced infinity norm: maximum absolute row sum.
inline double inf_norm(const Matrix& m) {
  double best = 0.0;
  for (int i = 0; i < m.size(); ++i) {
    double s = 0.0;
    for (int j = 0; j < m.size(); ++j) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

inline double dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("dot product: " + std::to_string(x.size()) +
                            " vs " + std::to_string(y.size()));
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// LU factorization with partial pivoting. A zero pivot marks the matrix
// singular; determinant() then returns 0 and solve() refuses to run.
class LuDecomposition {
 public:
  explicit LuDecomposition(Matrix a)
      : lu_(std::move(a)), perm_(static_cast<std::size_t>(lu_.size())) {
    const int n = lu_.size();
    std::iota(perm_.begin(), perm_.end(), 0);
    for (int k = 0; k < n; ++k) {
      int piv = k;
      for (int i = k + 1; i < n; ++i)
        if (std::abs(lu_(i, k)) > std::abs(lu_(piv, k))) piv = i;
      if (piv != k) {
        for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
        std::swap(perm_[k], perm_[piv]);
        sign_ = -sign_;
      }
      const double p = lu_(k, k);
      min_pivot_ = std::min(min_pivot_, std::abs(p));
      if (p == 0.0) {
        singular_ = true;
        continue;
      }
      for (int i = k + 1; i < n; ++i) {
        const double f = lu_(i, k) / p;
        lu_(i, k) = f;
        for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  int size() const { return lu_.size(); }
  bool singular() const { return singular_; }
  double min_pivot() const { return min_pivot_; }

  // Product of pivots; 1 for the empty matrix.
  double determinant() const {
    if (singular_) return 0.0;
    double d = sign_;
    for (int k = 0; k < lu_.size(); ++k) d *= lu_(k, k);
    return d;
  }

  Vector solve(const Vector& b) const {
    const int n = lu_.size();
    if (static_cast<int>(b.size()) != n)
      throw DimensionMismatch("solve: " + std::to_string(b.size()) + " vs " +
                              std::to_string(n));
    if (singular_) throw SingularSystem("zero pivot in LU solve");
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = b[static_cast<std::size_t>(perm_[i])];
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

 private:
  Matrix lu_;
  std::vector<int> perm_;
  int sign_ = 1;
  bool singular_ = false;
  double min_pivot_ = std::numeric_limits<double>::infinity();
};

inline double determinant(Matrix m) {
  return LuDecomposition(std::move(m)).determinant();
}

// Numerical rank via Gaussian elimination with full pivoting; pivots of
// magnitude <= pivot_tol count as zero.
inline int matrix_rank(Matrix m, double pivot_tol = kDefaultPivotTol) {
  if (pivot_tol <= 0.0) throw Error("pivot_tol must be positive");
  const int n = m.size();
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    int bi = k, bj = k;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j)
        if (std::abs(m(i, j)) > std::abs(m(bi, bj))) { bi = i; bj = j; }
    if (std::abs(m(bi, bj)) <= pivot_tol) break;
    if (bi != k)
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(bi, j));
    if (bj != k)
      for (int i = 0; i < n; ++i) std::swap(m(i, k), m(i, bj));
    for (int i = k + 1; i < n; ++i) {
      const double f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace degroot
