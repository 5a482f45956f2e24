#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "deltainfer/errors.hpp"

namespace deltainfer {

/// Minimal dense matrix; everything in this library is k x k with k <= 6.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t k) {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

namespace detail {

/// Cholesky factor of a symmetric positive-definite matrix. A pivot at or
/// below rel_tol * (largest diagonal of A) trips RankDeficient.
inline Matrix cholesky_spd(const Matrix& a, double rel_tol = 1e-12) {
  const std::size_t k = a.rows();
  if (k == 0 || a.cols() != k) throw DimensionError("cholesky needs a square matrix");
  double max_diag = 0.0;
  for (std::size_t i = 0; i < k; ++i) max_diag = std::max(max_diag, a(i, i));
  const double tol = rel_tol * max_diag;

  Matrix l(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    double d = a(j, j);
    for (std::size_t p = 0; p < j; ++p) d -= l(j, p) * l(j, p);
    if (!(d > tol)) throw RankDeficient("matrix is not positive definite within tolerance");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < k; ++i) {
      double s = a(i, j);
      for (std::size_t p = 0; p < j; ++p) s -= l(i, p) * l(j, p);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

inline std::vector<double> solve_with_factor(const Matrix& l,
                                             const std::vector<double>& b) {
  const std::size_t k = l.rows();
  std::vector<double> y(k), x(k);
  for (std::size_t i = 0; i < k; ++i) {
    double s = b[i];
    for (std::size_t p = 0; p < i; ++p) s -= l(i, p) * y[p];
    y[i] = s / l(i, i);
  }
  for (std::size_t i = k; i-- > 0;) {
    double s = y[i];
    for (std::size_t p = i + 1; p < k; ++p) s -= l(p, i) * x[p];
    x[i] = s / l(i, i);
  }
  return x;
}

}  // namespace detail

inline std::vector<double> solve_spd(const Matrix& a, const std::vector<double>& b) {
  if (b.size() != a.rows()) throw DimensionError("solve_spd dimension mismatch");
  return detail::solve_with_factor(detail::cholesky_spd(a), b);
}

/// Inverse of an SPD matrix via its Cholesky factor, symmetrized exactly.
inline Matrix inverse_spd(const Matrix& a) {
  const std::size_t k = a.rows();
  const Matrix l = detail::cholesky_spd(a);
  Matrix inv(k, k);
  std::vector<double> e(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    e[j] = 1.0;
    const std::vector<double> col = detail::solve_with_factor(l, e);
    for (std::size_t i = 0; i < k; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const double s = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = s;
      inv(j, i) = s;
    }
  return inv;
}

/// x^T A x for symmetric A.
inline double quadratic_form(const Matrix& a, const std::vector<double>& x) {
  if (x.size() != a.rows() || a.rows() != a.cols())
    throw DimensionError("quadratic_form dimension mismatch");
  double q = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) q += x[i] * a(i, j) * x[j];
  return q;
}

}  // namespace deltainfer
