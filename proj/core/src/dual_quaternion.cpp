#include "dqeig/dual_quaternion.hpp"

#include <algorithm>
#include <cmath>

namespace dqeig {

DualNumber magnitude(const DualQuaternion& q, double tol) {
  const double a = abs(q.s);
  if (a > tol) {
    // (q_s* q_d + q_d* q_s) / 2 is the real scalar dot(q_s, q_d).
    return {a, dot(q.s, q.d) / a};
  }
  return {0.0, abs(q.d)};
}

DualQuaternion inv(const DualQuaternion& q, double tol) {
  if (!appreciable(q, tol)) {
    throw DomainError("dual quaternion inverse: standard part is not appreciable");
  }
  const Quaternion si = inv(q.s);
  return {si, -(si * q.d * si)};
}

bool is_unit(const DualQuaternion& q, double tol) {
  const DualNumber m = magnitude(q);
  return std::abs(m.s - 1.0) <= tol && std::abs(m.d) <= tol;
}

DualComplex class_representative(const DualQuaternion& q, double tol, double dual_tol) {
  const Quaternion vs = vec(q.s);
  const Quaternion vd = vec(q.d);
  const double scale = std::max({1.0, abs(q.s), abs(q.d)});
  const double nvs = abs(vs);
  if (nvs > tol * scale) {
    return {Complex{q.s.w, nvs}, Complex{q.d.w, dot(vs, vd) / nvs}};
  }
  if (abs(vd) <= dual_tol * scale) {
    return {Complex{q.s.w, 0.0}, Complex{q.d.w, 0.0}};
  }
  throw ClassRepUndefined("class representative undefined: standard vector part is zero, dual vector part is not");
}

}  // namespace dqeig
