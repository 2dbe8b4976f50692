#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <ostream>

#include "dqeig/errors.hpp"

namespace dqeig {

/// Real quaternion w + x i + y j + z k with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : w(real) {}  // NOLINT(google-explicit-constructor)
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Embeds a complex number a + b i.
  static constexpr Quaternion from_complex(std::complex<double> c) { return {c.real(), c.imag(), 0.0, 0.0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

constexpr Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
constexpr Quaternion operator*(const Quaternion& q, double s) { return {q.w * s, q.x * s, q.y * s, q.z * s}; }
constexpr Quaternion operator/(const Quaternion& q, double s) { return {q.w / s, q.x / s, q.y / s, q.z / s}; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {
      p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
  };
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// |q|^2 = w^2 + x^2 + y^2 + z^2.
constexpr double norm2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// Scalar part of p* q, i.e. the Euclidean inner product of the coefficient vectors.
constexpr double dot(const Quaternion& p, const Quaternion& q) {
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

constexpr double real(const Quaternion& q) { return q.w; }
constexpr Quaternion vec(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }

/// q^{-1} = q* / |q|^2.
inline Quaternion inv(const Quaternion& q) {
  const double n2 = norm2(q);
  if (!(n2 >= std::numeric_limits<double>::min()) || !std::isfinite(n2)) {
    throw DomainError("quaternion inverse: zero or non-finite quaternion");
  }
  return conj(q) / n2;
}

inline bool isfinite(const Quaternion& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

/// Complex split q = a1 + a2 j with a1 = w + x i, a2 = y + z i.
constexpr std::complex<double> complex_part1(const Quaternion& q) { return {q.w, q.x}; }
constexpr std::complex<double> complex_part2(const Quaternion& q) { return {q.y, q.z}; }
constexpr Quaternion from_complex_pair(std::complex<double> a1, std::complex<double> a2) {
  return {a1.real(), a1.imag(), a2.real(), a2.imag()};
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

}  // namespace dqeig
