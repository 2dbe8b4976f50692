#pragma once

#include <compare>
#include <complex>
#include <ostream>

#include "dqeig/errors.hpp"

namespace dqeig {

using Complex = std::complex<double>;

/// Dual number s + d eps with eps^2 = 0.
///
/// Ordered lexicographically: standard part first, then dual part.
struct DualNumber {
  double s = 0.0;
  double d = 0.0;

  constexpr DualNumber() = default;
  constexpr DualNumber(double standard) : s(standard) {}  // NOLINT(google-explicit-constructor)
  constexpr DualNumber(double standard, double dual) : s(standard), d(dual) {}

  constexpr bool operator==(const DualNumber&) const = default;
  constexpr std::partial_ordering operator<=>(const DualNumber&) const = default;

  /// s > 0, or s == 0 and d >= 0.
  constexpr bool nonnegative() const { return s > 0.0 || (s == 0.0 && d >= 0.0); }
};

constexpr DualNumber operator+(const DualNumber& a, const DualNumber& b) { return {a.s + b.s, a.d + b.d}; }
constexpr DualNumber operator-(const DualNumber& a, const DualNumber& b) { return {a.s - b.s, a.d - b.d}; }
constexpr DualNumber operator-(const DualNumber& a) { return {-a.s, -a.d}; }
constexpr DualNumber operator*(const DualNumber& a, const DualNumber& b) {
  return {a.s * b.s, a.s * b.d + a.d * b.s};
}

constexpr std::partial_ordering dn_cmp(const DualNumber& a, const DualNumber& b) { return a <=> b; }

/// b / a. For a.s == 0 == b.s the free dual coefficient is fixed to zero.
///
/// Exact zero tests are intentional here: the degenerate branch is a
/// definition on exact values, callers decide appreciability beforehand.
inline DualNumber dn_div(const DualNumber& b, const DualNumber& a) {
  if (a.s != 0.0) {
    const double q = b.s / a.s;
    return {q, b.d / a.s - q * (a.d / a.s)};
  }
  if (b.s == 0.0 && a.d != 0.0) {
    return {b.d / a.d, 0.0};
  }
  throw DomainError("dual number division: divisor has zero standard part");
}

inline std::ostream& operator<<(std::ostream& os, const DualNumber& a) {
  return os << a.s << " + " << a.d << "eps";
}

/// Dual complex number s + d eps with complex parts. Multiplication is commutative.
struct DualComplex {
  Complex s{};
  Complex d{};

  constexpr DualComplex() = default;
  constexpr DualComplex(double standard) : s(standard) {}  // NOLINT(google-explicit-constructor)
  constexpr DualComplex(Complex standard, Complex dual = {}) : s(standard), d(dual) {}

  bool operator==(const DualComplex&) const = default;

  DualComplex& operator+=(const DualComplex& o) {
    s += o.s;
    d += o.d;
    return *this;
  }
  DualComplex& operator-=(const DualComplex& o) {
    s -= o.s;
    d -= o.d;
    return *this;
  }
};

inline DualComplex operator+(DualComplex a, const DualComplex& b) { return a += b; }
inline DualComplex operator-(DualComplex a, const DualComplex& b) { return a -= b; }
inline DualComplex operator-(const DualComplex& a) { return {-a.s, -a.d}; }
inline DualComplex operator*(const DualComplex& p, const DualComplex& q) {
  return {p.s * q.s, p.s * q.d + p.d * q.s};
}
inline DualComplex operator*(const DualComplex& p, double a) { return {p.s * a, p.d * a}; }
inline DualComplex operator*(double a, const DualComplex& p) { return {a * p.s, a * p.d}; }
inline DualComplex conj(const DualComplex& a) { return {std::conj(a.s), std::conj(a.d)}; }

inline std::ostream& operator<<(std::ostream& os, const DualComplex& a) {
  return os << a.s << " + " << a.d << "eps";
}

}  // namespace dqeig
