#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dqeig/dual.hpp"
#include "dqeig/dual_quaternion.hpp"
#include "dqeig/errors.hpp"
#include "dqeig/quaternion.hpp"

namespace dqeig {

/// Dense column vector over a (possibly non-commutative) scalar ring.
template <class T>
class Vector {
 public:
  using value_type = T;

  Vector() = default;
  explicit Vector(std::size_t n, const T& fill = T{}) : data_(n, fill) {}
  Vector(std::initializer_list<T> init) : data_(init) {}
  explicit Vector(std::vector<T> data) : data_(std::move(data)) {}

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  std::span<T> span() { return data_; }
  std::span<const T> span() const { return data_; }
  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  bool operator==(const Vector&) const = default;

 private:
  std::vector<T> data_;
};

/// Dense row-major matrix over a (possibly non-commutative) scalar ring.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Row-wise initializer, e.g. Matrix<double>{{1, 2}, {3, 4}}.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  template <class Range>
  static Matrix diagonal(const Range& diag) {
    const std::size_t n = std::size(diag);
    Matrix m(n, n);
    std::size_t i = 0;
    for (const auto& v : diag) {
      m(i, i) = T(v);
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Vector<T> column(std::size_t j) const {
    Vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QVector = Vector<Quaternion>;
using QMatrix = Matrix<Quaternion>;
using DQVector = Vector<DualQuaternion>;
using DQMatrix = Matrix<DualQuaternion>;
using CVector = Vector<Complex>;
using CMatrix = Matrix<Complex>;
using DCVector = Vector<DualComplex>;
using DCMatrix = Matrix<DualComplex>;

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}
}  // namespace detail

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: shape mismatch");
  Matrix<T> r = a;
  auto rd = r.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < rd.size(); ++i) rd[i] += bd[i];
  return r;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference: shape mismatch");
  Matrix<T> r = a;
  auto rd = r.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < rd.size(); ++i) rd[i] -= bd[i];
  return r;
}

template <class T>
Vector<T> operator+(const Vector<T>& a, const Vector<T>& b) {
  detail::require(a.size() == b.size(), "vector sum: length mismatch");
  Vector<T> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class T>
Vector<T> operator-(const Vector<T>& a, const Vector<T>& b) {
  detail::require(a.size() == b.size(), "vector difference: length mismatch");
  Vector<T> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

/// Matrix product; scalar products keep left-to-right order.
template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require(a.cols() == b.rows(), "matrix product: inner dimensions differ");
  Matrix<T> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = r.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * brow[j];
    }
  }
  return r;
}

template <class T>
Vector<T> operator*(const Matrix<T>& a, const Vector<T>& x) {
  detail::require(a.cols() == x.size(), "matrix-vector product: inner dimensions differ");
  Vector<T> r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto arow = a.row(i);
    T acc{};
    for (std::size_t k = 0; k < arow.size(); ++k) acc += arow[k] * x[k];
    r[i] = acc;
  }
  return r;
}

/// Entry (i, j) of the result is conj(a(j, i)).
template <class T>
Matrix<T> conj_transpose(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = conj(a(i, j));
  return r;
}

/// x* y = sum_i conj(x_i) y_i.
template <class T>
T inner(const Vector<T>& x, const Vector<T>& y) {
  detail::require(x.size() == y.size(), "inner product: length mismatch");
  T acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += conj(x[i]) * y[i];
  return acc;
}

/// Right scalar multiplication x * alpha (entrywise x_i alpha).
template <class T>
Vector<T> scale_right(const Vector<T>& x, const T& alpha) {
  Vector<T> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * alpha;
  return r;
}

/// Scalar multiplication by a real factor (commutes with every scalar type).
template <class T>
Vector<T> scale_real(const Vector<T>& x, double a) {
  Vector<T> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * a;
  return r;
}

}  // namespace dqeig
