#pragma once

#include "twophoton/errors.hpp"
#include "twophoton/scalar.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace twophoton {

/// Dense row-major matrix over an exact or floating scalar type.
/// Products skip zero entries, which dominate the shift-like operators here.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto &x : data_)
      if (!twophoton::is_zero(x))
        return false;
    return true;
  }

  /// Nonzero entries only on or below the diagonal (i ≥ j); with `strict`,
  /// only strictly below it.
  bool is_lower_triangular(bool strict = false) const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = strict ? i : i + 1; j < cols_; ++j)
        if (!twophoton::is_zero((*this)(i, j)))
          return false;
    return true;
  }

  Matrix &operator+=(const Matrix &o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!twophoton::is_zero(o.data_[k]))
        data_[k] += o.data_[k];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!twophoton::is_zero(o.data_[k]))
        data_[k] -= o.data_[k];
    return *this;
  }
  Matrix &operator*=(const T &s) {
    for (auto &x : data_)
      if (!twophoton::is_zero(x))
        x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix x, const Matrix &y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix &y) { return x -= y; }
  friend Matrix operator*(const T &s, Matrix x) { return x *= s; }
  Matrix operator-() const {
    Matrix r = *this;
    r *= T(-1);
    return r;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw DomainError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (twophoton::is_zero(aik))
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T &bkj = b(k, j);
          if (!twophoton::is_zero(bkj))
            c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class F> auto map(F &&f) const -> Matrix<decltype(f(std::declval<const T &>()))> {
    Matrix<decltype(f(std::declval<const T &>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(i, j) = f((*this)(i, j));
    return out;
  }

  /// Top-left n×n block.
  Matrix block(std::size_t n) const {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) = (*this)(i, j);
    return out;
  }

private:
  void check_same(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;

template <class T> Matrix<T> commutator(const Matrix<T> &a, const Matrix<T> &b) {
  return a * b - b * a;
}

/// Kronecker product a⊗b; index (i, j) ↦ i·dim(b) + j.
template <class T> Matrix<T> kron(const Matrix<T> &a, const Matrix<T> &b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T &aij = a(i, j);
      if (is_zero(aij))
        continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l)))
            out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

/// Applies the leg permutation `perm` (new leg p takes old leg perm[p]) to an
/// operator on V^{⊗n}, dim V = d.
template <class T>
Matrix<T> permute_legs(const Matrix<T> &m, std::size_t d, const std::vector<std::size_t> &perm) {
  const std::size_t n = perm.size();
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k)
    total *= d;
  if (m.rows() != total || m.cols() != total)
    throw DomainError("permute_legs: matrix does not act on V^{⊗n}");
  std::vector<std::size_t> map(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<std::size_t> digits(n);
    std::size_t rem = idx;
    for (std::size_t k = n; k-- > 0;) {
      digits[k] = rem % d;
      rem /= d;
    }
    std::size_t out = 0;
    for (std::size_t p = 0; p < n; ++p)
      out = out * d + digits[perm[p]];
    map[idx] = out;
  }
  Matrix<T> r(total, total);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (!is_zero(m(i, j)))
        r(map[i], map[j]) = m(i, j);
  return r;
}

/// σ: swaps the two legs of an operator on V⊗V.
template <class T> Matrix<T> swap_legs(const Matrix<T> &m, std::size_t d) {
  return permute_legs(m, d, {1, 0});
}

} // namespace twophoton
