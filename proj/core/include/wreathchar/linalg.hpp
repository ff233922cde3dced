// SPDX-License-Identifier: Apache-2.0
//
// Exact dense Gaussian elimination, templated over any field type that
// supports +, -, *, /, is_zero() and copying (Rational and Cyclotomic here).
// Pivoting picks the first nonzero entry; over an exact field that is all
// correctness requires.

#ifndef WREATHCHAR_LINALG_HPP
#define WREATHCHAR_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wreathchar {

template <class F>
using Matrix = std::vector<std::vector<F>>;

namespace detail {
template <class F>
F zero_like(const F& x) {
  return x - x;
}
}  // namespace detail

/// Row-reduces m in place and returns its rank.  m may be ragged-free
/// rectangular; an empty matrix has rank 0.
template <class F>
std::size_t exact_rank(Matrix<F> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const F pivval = m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] / pivval;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      const F f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Solves A x = b exactly.  Returns std::nullopt when the system is
/// inconsistent; with an underdetermined system the free variables are set
/// to zero.  The returned vector is re-multiplied against A to confirm it
/// actually solves the system before being handed back.
template <class F>
std::optional<std::vector<F>> exact_solve(const Matrix<F>& a,
                                          const std::vector<F>& b) {
  const std::size_t rows = a.size();
  if (rows != b.size())
    throw std::invalid_argument("exact_solve: dimension mismatch");
  if (rows == 0) return std::vector<F>{};
  const std::size_t cols = a[0].size();
  const F zero = detail::zero_like(b.empty() ? a[0][0] : b[0]);

  Matrix<F> aug = a;
  for (std::size_t i = 0; i < rows; ++i) {
    if (aug[i].size() != cols)
      throw std::invalid_argument("exact_solve: ragged matrix");
    aug[i].push_back(b[i]);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(aug[rank], aug[pivot]);
    const F pivval = aug[rank][col];
    for (std::size_t j = col; j <= cols; ++j) aug[rank][j] = aug[rank][j] / pivval;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || aug[i][col].is_zero()) continue;
      const F f = aug[i][col];
      for (std::size_t j = col; j <= cols; ++j)
        aug[i][j] = aug[i][j] - f * aug[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (!aug[i][cols].is_zero()) return std::nullopt;

  std::vector<F> x(cols, zero);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = aug[i][cols];

  // Exact arithmetic should make this a tautology; treat failure as a bug.
  for (std::size_t i = 0; i < rows; ++i) {
    F acc = zero;
    for (std::size_t j = 0; j < cols; ++j) acc = acc + a[i][j] * x[j];
    if (!(acc - b[i]).is_zero())
      throw std::logic_error("exact_solve: verification failed");
  }
  return x;
}

/// Inverse of a square matrix by Gauss-Jordan on [A | I]; nullopt when A is
/// singular.  Worth it over repeated exact_solve calls as soon as the same
/// matrix is solved against more than a handful of right-hand sides.
template <class F>
std::optional<Matrix<F>> exact_inverse(const Matrix<F>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Matrix<F>{};
  if (a[0].size() != n)
    throw std::invalid_argument("exact_inverse: matrix not square");
  const F zero = detail::zero_like(a[0][0]);
  F one = zero;
  bool found_unit = false;
  for (std::size_t i = 0; i < n && !found_unit; ++i)
    for (std::size_t j = 0; j < n && !found_unit; ++j)
      if (!a[i][j].is_zero()) {
        one = a[i][j] / a[i][j];
        found_unit = true;
      }
  if (!found_unit) return std::nullopt;  // all-zero matrix

  Matrix<F> aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n)
      throw std::invalid_argument("exact_inverse: ragged matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? one : zero);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(aug[col], aug[pivot]);
    const F pivval = aug[col][col];
    for (std::size_t j = col; j < 2 * n; ++j) aug[col][j] = aug[col][j] / pivval;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col].is_zero()) continue;
      const F f = aug[i][col];
      for (std::size_t j = col; j < 2 * n; ++j)
        aug[i][j] = aug[i][j] - f * aug[col][j];
    }
  }
  Matrix<F> inv(n);
  for (std::size_t i = 0; i < n; ++i)
    inv[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
  return inv;
}

/// Solves A X = B columnwise; nullopt if any column is inconsistent.
template <class F>
std::optional<Matrix<F>> exact_solve_matrix(const Matrix<F>& a,
                                            const Matrix<F>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("exact_solve_matrix: dimension mismatch");
  if (a.empty()) return Matrix<F>{};
  const std::size_t ncols_b = b[0].size();
  const std::size_t ncols_a = a[0].size();
  Matrix<F> x(ncols_a);
  for (std::size_t k = 0; k < ncols_b; ++k) {
    std::vector<F> col;
    col.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) col.push_back(b[i][k]);
    auto sol = exact_solve(a, col);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < ncols_a; ++j) x[j].push_back((*sol)[j]);
  }
  return x;
}

}  // namespace wreathchar

#endif  // WREATHCHAR_LINALG_HPP
