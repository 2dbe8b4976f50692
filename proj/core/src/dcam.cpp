#include "dqeig/dcam.hpp"

#include <cmath>

namespace dqeig {

namespace {

template <class Fill>
void fill_blocks(std::size_t m, std::size_t n, Fill&& fill) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) fill(i, j);
}

}  // namespace

CMatrix complex_adjoint(const QMatrix& q) {
  const std::size_t m = q.rows();
  const std::size_t n = q.cols();
  CMatrix r(2 * m, 2 * n);
  fill_blocks(m, n, [&](std::size_t i, std::size_t j) {
    const Complex a1 = complex_part1(q(i, j));
    const Complex a2 = complex_part2(q(i, j));
    r(i, j) = a1;
    r(i, j + n) = a2;
    r(i + m, j) = -std::conj(a2);
    r(i + m, j + n) = std::conj(a1);
  });
  return r;
}

DCMatrix dcam_map(const DQMatrix& q) {
  const std::size_t m = q.rows();
  const std::size_t n = q.cols();
  DCMatrix r(2 * m, 2 * n);
  fill_blocks(m, n, [&](std::size_t i, std::size_t j) {
    const DualQuaternion& e = q(i, j);
    const Complex s1 = complex_part1(e.s), s2 = complex_part2(e.s);
    const Complex d1 = complex_part1(e.d), d2 = complex_part2(e.d);
    r(i, j) = {s1, d1};
    r(i, j + n) = {s2, d2};
    r(i + m, j) = {-std::conj(s2), -std::conj(d2)};
    r(i + m, j + n) = {std::conj(s1), std::conj(d1)};
  });
  return r;
}

DCVector f_map(const DQVector& v) {
  const std::size_t n = v.size();
  DCVector r(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = {complex_part1(v[i].s), complex_part1(v[i].d)};
    r[i + n] = {-std::conj(complex_part2(v[i].s)), -std::conj(complex_part2(v[i].d))};
  }
  return r;
}

DQVector f_inv(const DCVector& u) {
  if (u.size() % 2 != 0) throw DimensionError("f_inv: vector length must be even");
  const std::size_t n = u.size() / 2;
  DQVector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    // u1 - conj(u2) j, per part.
    r[i].s = from_complex_pair(u[i].s, -std::conj(u[i + n].s));
    r[i].d = from_complex_pair(u[i].d, -std::conj(u[i + n].d));
  }
  return r;
}

bool has_adjoint_structure(const DCMatrix& m, double tol) {
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0) return false;
  const std::size_t r = m.rows() / 2;
  const std::size_t c = m.cols() / 2;
  auto close = [tol](Complex a, Complex b) { return std::abs(a - b) <= tol; };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const DualComplex& a1 = m(i, j);
      const DualComplex& a2 = m(i, j + c);
      const DualComplex& lower_left = m(i + r, j);
      const DualComplex& lower_right = m(i + r, j + c);
      if (!close(lower_left.s, -std::conj(a2.s)) || !close(lower_left.d, -std::conj(a2.d))) return false;
      if (!close(lower_right.s, std::conj(a1.s)) || !close(lower_right.d, std::conj(a1.d))) return false;
    }
  }
  return true;
}

}  // namespace dqeig
