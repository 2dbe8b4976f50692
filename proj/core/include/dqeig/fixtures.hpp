#pragma once

#include <string_view>

#include "dqeig/dense.hpp"

namespace dqeig {

/// Small matrices on which the power method does not converge, each paired
/// with its starting vector.
struct DivergenceFixture {
  DQMatrix matrix;
  DQVector v0;
};

/// A_s = A_d = i I_2, v0 = [1 + eps, j]. Iterates cycle with period 4.
DivergenceFixture stalled_rotation_fixture();

/// A_s = I_3, A_d = [[2,0,0],[0,1,1],[0,0,1]], v0 = [1,1,1]. The eigenvalue
/// estimate is constant at 1 + (5/3) eps while the residual stays put.
DivergenceFixture defective_dual_fixture();

/// A_s = I_2, A_d = i I_2, v0 = [1, j]. lambda stays at 1 and the dual part of
/// the iterate grows linearly.
DivergenceFixture drifting_dual_fixture();

/// Lookup by name: "fail-iii", "fail-iv" or "fail-v". Throws DomainError
/// otherwise.
DivergenceFixture divergence_fixture(std::string_view name);

}  // namespace dqeig
