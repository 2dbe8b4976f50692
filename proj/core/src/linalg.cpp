#include "dqeig/linalg.hpp"

#include <cmath>
#include <utility>

namespace dqeig {

DQMatrix make_dual(const QMatrix& standard, const QMatrix& dual) {
  if (standard.rows() != dual.rows() || standard.cols() != dual.cols()) {
    throw DimensionError("make_dual: standard and dual parts differ in shape");
  }
  DQMatrix r(standard.rows(), standard.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = {standard(i, j), dual(i, j)};
  return r;
}

DQVector make_dual(const QVector& standard, const QVector& dual) {
  if (standard.size() != dual.size()) throw DimensionError("make_dual: length mismatch");
  DQVector r(standard.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = {standard[i], dual[i]};
  return r;
}

bool is_hermitian(const DQMatrix& a, double tol) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      const DualQuaternion diff = a(i, j) - conj(a(j, i));
      if (abs(diff.s) > tol || abs(diff.d) > tol) return false;
    }
  }
  return true;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  const double scale = frobenius(m);
  const double pivot_floor = 1e-12 * scale;

  QMatrix work = m;
  QMatrix result = QMatrix::identity(n);

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    double best = abs(work(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      const double v = abs(work(r, c));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best > pivot_floor)) {
      throw SingularMatrixError("inverse: pivot below 1e-12 * ||M||_F");
    }
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(c, j), work(piv, j));
        std::swap(result(c, j), result(piv, j));
      }
    }

    const Quaternion pinv = inv(work(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) = pinv * work(c, j);
      result(c, j) = pinv * result(c, j);
    }

    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const Quaternion f = work(r, c);
      if (f == Quaternion{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(c, j);
        result(r, j) -= f * result(c, j);
      }
    }
  }
  return result;
}

DQMatrix inverse(const DQMatrix& a) {
  if (!a.square()) throw DimensionError("inverse: matrix is not square");
  const QMatrix s_inv = inverse(standard_part(a));
  const QMatrix d = dual_part(a);
  QMatrix d_inv = s_inv * d * s_inv;
  for (auto& q : d_inv.data()) q = -q;
  return make_dual(s_inv, d_inv);
}

}  // namespace dqeig
