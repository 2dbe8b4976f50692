#include "dqeig/fixtures.hpp"

#include <string>

namespace dqeig {

namespace {

DQMatrix diag2(const DualQuaternion& a) {
  DQMatrix m(2, 2);
  m(0, 0) = a;
  m(1, 1) = a;
  return m;
}

}  // namespace

DivergenceFixture stalled_rotation_fixture() {
  const Quaternion i = Quaternion::i();
  DivergenceFixture f{diag2({i, i}), DQVector(2)};
  f.v0[0] = {Quaternion(1.0), Quaternion(1.0)};
  f.v0[1] = {Quaternion::j(), Quaternion()};
  return f;
}

DivergenceFixture defective_dual_fixture() {
  DivergenceFixture f{DQMatrix(3, 3), DQVector(3)};
  for (std::size_t k = 0; k < 3; ++k) {
    f.matrix(k, k).s = Quaternion(1.0);
    f.v0[k] = DualQuaternion(1.0);
  }
  f.matrix(0, 0).d = Quaternion(2.0);
  f.matrix(1, 1).d = Quaternion(1.0);
  f.matrix(1, 2).d = Quaternion(1.0);
  f.matrix(2, 2).d = Quaternion(1.0);
  return f;
}

DivergenceFixture drifting_dual_fixture() {
  DivergenceFixture f{diag2({Quaternion(1.0), Quaternion::i()}), DQVector(2)};
  f.v0[0] = DualQuaternion(1.0);
  f.v0[1] = {Quaternion::j(), Quaternion()};
  return f;
}

DivergenceFixture divergence_fixture(std::string_view name) {
  if (name == "fail-iii") return stalled_rotation_fixture();
  if (name == "fail-iv") return defective_dual_fixture();
  if (name == "fail-v") return drifting_dual_fixture();
  throw DomainError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace dqeig
