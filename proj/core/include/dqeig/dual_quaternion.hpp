#pragma once

#include <ostream>

#include "dqeig/dual.hpp"
#include "dqeig/quaternion.hpp"

namespace dqeig {

/// Default appreciability threshold on |q_s| relative to the computation's scale.
inline constexpr double kAppreciableTol = 1e-12;

/// Dual quaternion s + d eps with quaternion parts.
struct DualQuaternion {
  Quaternion s{};
  Quaternion d{};

  constexpr DualQuaternion() = default;
  constexpr DualQuaternion(double real) : s(real) {}  // NOLINT(google-explicit-constructor)
  constexpr DualQuaternion(const Quaternion& standard) : s(standard) {}  // NOLINT(google-explicit-constructor)
  constexpr DualQuaternion(const Quaternion& standard, const Quaternion& dual) : s(standard), d(dual) {}

  /// The infinitesimal unit.
  static constexpr DualQuaternion eps() { return {Quaternion{}, Quaternion{1.0}}; }

  static constexpr DualQuaternion from_dual_complex(const DualComplex& c) {
    return {Quaternion::from_complex(c.s), Quaternion::from_complex(c.d)};
  }

  constexpr bool operator==(const DualQuaternion&) const = default;

  constexpr DualQuaternion& operator+=(const DualQuaternion& o) {
    s += o.s;
    d += o.d;
    return *this;
  }
  constexpr DualQuaternion& operator-=(const DualQuaternion& o) {
    s -= o.s;
    d -= o.d;
    return *this;
  }
};

constexpr DualQuaternion operator+(DualQuaternion a, const DualQuaternion& b) { return a += b; }
constexpr DualQuaternion operator-(DualQuaternion a, const DualQuaternion& b) { return a -= b; }
constexpr DualQuaternion operator-(const DualQuaternion& a) { return {-a.s, -a.d}; }

/// (p_s + p_d eps)(q_s + q_d eps) = p_s q_s + (p_s q_d + p_d q_s) eps.
constexpr DualQuaternion operator*(const DualQuaternion& p, const DualQuaternion& q) {
  return {p.s * q.s, p.s * q.d + p.d * q.s};
}
constexpr DualQuaternion operator*(double a, const DualQuaternion& q) { return {a * q.s, a * q.d}; }
constexpr DualQuaternion operator*(const DualQuaternion& q, double a) { return {q.s * a, q.d * a}; }

constexpr DualQuaternion conj(const DualQuaternion& q) { return {conj(q.s), conj(q.d)}; }

inline bool isfinite(const DualQuaternion& q) { return isfinite(q.s) && isfinite(q.d); }

/// |q_s| > tol * scale.
inline bool appreciable(const DualQuaternion& q, double tol = kAppreciableTol, double scale = 1.0) {
  return abs(q.s) > tol * scale;
}

/// Dual-number magnitude |q|; the non-appreciable branch returns |q_d| eps.
DualNumber magnitude(const DualQuaternion& q, double tol = kAppreciableTol);

/// q^{-1} = q_s^{-1} - q_s^{-1} q_d q_s^{-1} eps. Throws DomainError when not appreciable.
DualQuaternion inv(const DualQuaternion& q, double tol = kAppreciableTol);

/// |q| == 1 + 0 eps within tol in both parts.
bool is_unit(const DualQuaternion& q, double tol = 1e-12);

/// Dual complex representative of the similarity class [q]_D with nonnegative
/// standard imaginary part. Throws ClassRepUndefined when the standard vector
/// part is below tol * scale while the dual vector part exceeds
/// dual_tol * scale, with scale = max(1, |q_s|, |q_d|).
DualComplex class_representative(const DualQuaternion& q, double tol = kAppreciableTol,
                                 double dual_tol = 1e-8);

inline std::ostream& operator<<(std::ostream& os, const DualQuaternion& q) {
  return os << q.s << " + " << q.d << "eps";
}

}  // namespace dqeig
