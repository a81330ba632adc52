#ifndef DRINFELD_MATRIX_HPP
#define DRINFELD_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "drinfeld/errors.hpp"

namespace drinfeld {

// Small dense matrices over a commutative ring R (row-major).
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const R& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw DomainError("matrix shape mismatch");
    Matrix out(x.r_, y.c_, zero_like(x.a_.front()));
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k)
        for (std::size_t j = 0; j < y.c_; ++j) out(i, j) += x(i, k) * y(k, j);
    return out;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<R> a_;
};

// Laplace expansion; fine for the 2x2 and 3x3 Gram matrices over A/(n),
// which need not be a field.
template <class R>
R det_laplace(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) throw DomainError("determinant of an empty matrix");
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  R acc = zero_like(m(0, 0));
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<R> minor(n - 1, n - 1, m(0, 0));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, kk++) = m(i, k);
      }
    R term = m(0, j) * det_laplace(minor);
    if (j % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// Gaussian elimination over a field.
template <class F>
F det_field(Matrix<F> m) {
  const std::size_t n = m.rows();
  if (n != m.cols() || n == 0) throw DomainError("determinant of a non-square matrix");
  F det = one_like(m(0, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m(piv, col))) ++piv;
    if (piv == n) return zero_like(det);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    F inv = inverse(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      F f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

// x with m x = b over a field, if one exists (any solution).
template <class F>
std::optional<std::vector<F>> solve_field(Matrix<F> m, std::vector<F> b) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m(piv, col))) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    std::swap(b[piv], b[r]);
    F inv = inverse(m(r, col));
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = inv * m(r, j);
    b[r] = inv * b[r];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, col))) continue;
      F f = m(i, col);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
      b[i] -= f * b[r];
    }
    pivcol.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!is_zero(b[i])) return std::nullopt;
  std::vector<F> x(cols, zero_like(b.front()));
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
  return x;
}

// Linear algebra over F_p on uint32 rows; the workhorse for kernels of
// F_q-linear maps written out in F_p coordinates.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p) : r_(rows), c_(cols), p_(p), a_(rows * cols, 0) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  // basis of {v : M v = 0}
  std::vector<std::vector<std::uint32_t>> kernel() const;
  std::size_t rank() const;
  // some x with M x = b
  std::optional<std::vector<std::uint32_t>> solve(const std::vector<std::uint32_t>& b) const;

 private:
  // reduced row echelon form in place; returns pivot columns
  std::vector<std::size_t> rref(std::vector<std::uint32_t>* rhs);

  std::size_t r_, c_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p);

}  // namespace drinfeld

#endif  // DRINFELD_MATRIX_HPP
