#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>

#include "dqeig/dense.hpp"

namespace dqeig {

// Norms over vectors and matrices of dual scalars (DualQuaternion or
// DualComplex). Every dual-valued norm follows the same pattern: the
// standard part is the real norm of the standard part, the dual part is
// Re(x_s* x_d) / ||x_s||, and a non-appreciable standard part falls back to
// ||x_d|| eps.

namespace detail {

inline double part_norm2(const Quaternion& q) { return norm2(q); }
inline double part_norm2(const Complex& c) { return std::norm(c); }
inline double part_dot(const Quaternion& a, const Quaternion& b) { return dot(a, b); }
inline double part_dot(const Complex& a, const Complex& b) { return a.real() * b.real() + a.imag() * b.imag(); }

/// Neumaier-compensated sum carried in long double.
class Accumulator {
 public:
  void add(long double v) {
    const long double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return static_cast<double>(sum_ + comp_); }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

struct PartSums {
  double ss = 0.0;  // sum |x_s|^2
  double dd = 0.0;  // sum |x_d|^2
  double sd = 0.0;  // sum Re(conj(x_s) x_d)
};

template <class D>
PartSums part_sums(std::span<const D> xs) {
  Accumulator ss, dd, sd;
  for (const D& x : xs) {
    ss.add(part_norm2(x.s));
    dd.add(part_norm2(x.d));
    sd.add(part_dot(x.s, x.d));
  }
  return {ss.value(), dd.value(), sd.value()};
}

inline DualNumber dual_norm_from_sums(const PartSums& p, double tol) {
  const double a = std::sqrt(p.ss);
  if (a > tol) return {a, p.sd / a};
  return {0.0, std::sqrt(p.dd)};
}

}  // namespace detail

/// Dual-number 2-norm ||x||_2.
template <class D>
DualNumber norm_2(const Vector<D>& x, double tol = kAppreciableTol) {
  return detail::dual_norm_from_sums(detail::part_sums<D>(x.span()), tol);
}

/// ||x||_{2^R} = sqrt(||x_s||^2 + ||x_d||^2).
template <class D>
double norm_2R(const Vector<D>& x) {
  const auto p = detail::part_sums<D>(x.span());
  return std::sqrt(p.ss + p.dd);
}

/// Dual-number Frobenius norm: ||A_s||_F + tr(A_s* A_d + A_d* A_s) / (2 ||A_s||_F) eps.
template <class D>
DualNumber norm_F(const Matrix<D>& a, double tol = kAppreciableTol) {
  return detail::dual_norm_from_sums(detail::part_sums<D>(a.data()), tol);
}

/// ||A||_{F^R} = sqrt(||A_s||_F^2 + ||A_d||_F^2).
template <class D>
double norm_FR(const Matrix<D>& a) {
  const auto p = detail::part_sums<D>(a.data());
  return std::sqrt(p.ss + p.dd);
}

/// Frobenius norm of a quaternion or complex matrix.
template <class T>
double frobenius(const Matrix<T>& a) {
  detail::Accumulator acc;
  for (const T& v : a.data()) acc.add(detail::part_norm2(v));
  return std::sqrt(acc.value());
}

template <class T>
double euclidean(const Vector<T>& x) {
  detail::Accumulator acc;
  for (const T& v : x) acc.add(detail::part_norm2(v));
  return std::sqrt(acc.value());
}

/// Divides every entry by the dual number ||x||_2. Throws BreakdownError when
/// ||x_s|| <= breakdown_tol.
template <class D>
Vector<D> normalize(const Vector<D>& x, double breakdown_tol = kAppreciableTol) {
  const auto p = detail::part_sums<D>(x.span());
  const double as = std::sqrt(p.ss);
  if (!(as > breakdown_tol) || !std::isfinite(as)) {
    throw BreakdownError("normalize: standard part of the vector is not appreciable");
  }
  const double ad = p.sd / as;
  const double inv_s = 1.0 / as;
  const double shift = ad / (as * as);
  Vector<D> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r[i].s = x[i].s * inv_s;
    r[i].d = x[i].d * inv_s - x[i].s * shift;
  }
  return r;
}

/// ||A v - v lambda||_{2^R}.
template <class D>
double residual_2R(const Matrix<D>& a, const Vector<D>& v, const D& lambda) {
  return norm_2R((a * v) - scale_right(v, lambda));
}

template <class D>
auto standard_part(const Matrix<D>& a) {
  Matrix<std::remove_cvref_t<decltype(D{}.s)>> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).s;
  return r;
}

template <class D>
auto dual_part(const Matrix<D>& a) {
  Matrix<std::remove_cvref_t<decltype(D{}.d)>> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).d;
  return r;
}

template <class D>
auto standard_part(const Vector<D>& x) {
  Vector<std::remove_cvref_t<decltype(D{}.s)>> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i].s;
  return r;
}

template <class D>
auto dual_part(const Vector<D>& x) {
  Vector<std::remove_cvref_t<decltype(D{}.d)>> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i].d;
  return r;
}

DQMatrix make_dual(const QMatrix& standard, const QMatrix& dual);
DQVector make_dual(const QVector& standard, const QVector& dual);

/// Hermitian predicate A* == A within tol (entrywise, both parts).
bool is_hermitian(const DQMatrix& a, double tol = 0.0);

/// Gauss-Jordan inverse over quaternions with left-multiplied row operations
/// and partial pivoting on entry magnitude (ties to the lowest row index).
/// Throws SingularMatrixError if a pivot falls below 1e-12 * ||M||_F.
QMatrix inverse(const QMatrix& m);

/// Dual quaternion matrix inverse: A_s^{-1} - A_s^{-1} A_d A_s^{-1} eps.
DQMatrix inverse(const DQMatrix& a);

}  // namespace dqeig
