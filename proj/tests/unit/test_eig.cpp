#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dqeig/eig.hpp"
#include "dqeig/fixtures.hpp"
#include "dqeig/graphgen.hpp"
#include "dqeig/linalg.hpp"

namespace dqeig {
namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();

DualQuaternion dq(double s, double d = 0.0) { return {Quaternion(s), Quaternion(d)}; }

double dist(const DualQuaternion& a, const DualQuaternion& b) {
  const DualQuaternion d = a - b;
  return std::sqrt(norm2(d.s) + norm2(d.d));
}

DQMatrix diag_2eps_1() { return DQMatrix{{dq(2, 1), dq(0)}, {dq(0), dq(1)}}; }

DQVector unit_start() {
  const double h = 1.0 / std::sqrt(2.0);
  return DQVector{dq(h), dq(h)};
}

TEST(PowerMethod, DiagonalClosedForm) {
  const EigResult r = power_method(diag_2eps_1(), unit_start());
  EXPECT_EQ(r.status, Status::Converged);
  EXPECT_LE(r.iterations, 40);
  EXPECT_LE(dist(r.eigenvalue, dq(2, 1)), 1e-8);
  EXPECT_EQ(r.trace.size(), static_cast<std::size_t>(r.iterations));
  EXPECT_LE(residual_2R(diag_2eps_1(), r.eigenvector, r.eigenvalue), 1e-10);
}

TEST(DcamPowerMethod, DiagonalClosedForm) {
  const EigResult r = dcam_power_method(diag_2eps_1(), unit_start());
  EXPECT_EQ(r.status, Status::Converged);
  EXPECT_LE(dist(r.eigenvalue, dq(2, 1)), 1e-8);
  EXPECT_LE(residual_2R(diag_2eps_1(), r.eigenvector, r.eigenvalue), 1e-10);
}

TEST(PowerMethod, IteratesStayNormalized) {
  Rng rng(31);
  const DQMatrix a = cycle_laplacian(6, rng).laplacian;
  const DQVector v0 = random_initial_vector(6, rng);
  double worst = 0.0;
  power_method(a, v0, {}, [&](const IterationState& st) {
    const DualNumber n = norm_2(st.v);
    worst = std::max({worst, std::abs(n.s - 1.0), std::abs(n.d)});
  });
  EXPECT_LE(worst, 1e-12);
}

TEST(PowerMethod, ConvergedPairPassesIndependentResidual) {
  Rng rng(32);
  const DQMatrix a = wheel_laplacian(6, rng).laplacian;
  const EigResult r = power_method(a, random_initial_vector(6, rng));
  ASSERT_EQ(r.status, Status::Converged);
  EXPECT_LE(residual_2R(a, r.eigenvector, r.eigenvalue), 1e-10);
}

TEST(PowerMethod, GaugeFreedomPreservesClass) {
  Rng rng(33);
  const std::vector<DualComplex> eigs = {{{3.0, 0.0}, {1.0, 0.0}}, {{1.0, 1.0}, {0.0, 1.0}}, {{0.5, 0.0}, {2.0, 0.0}}};
  const DQMatrix a = prescribed_spectrum_matrix(eigs, rng).matrix;
  const DQVector v0 = random_initial_vector(3, rng);
  const DualQuaternion alpha = random_unit_dual_quaternion(rng);
  const EigResult r0 = power_method(a, v0);
  const EigResult r1 = power_method(a, scale_right(v0, alpha));
  ASSERT_EQ(r0.status, Status::Converged);
  ASSERT_EQ(r1.status, Status::Converged);
  const DualComplex c0 = class_representative(r0.eigenvalue);
  const DualComplex c1 = class_representative(r1.eigenvalue);
  EXPECT_LE(std::abs(c0.s - c1.s), 1e-8);
  EXPECT_LE(std::abs(c0.d - c1.d), 1e-8);
}

TEST(PowerMethod, AgreesWithDcamUnderRealDominant) {
  Rng rng(34);
  std::vector<DualComplex> eigs(8, DualComplex{{1.0, 0.5}, {0.3, 0.0}});
  eigs[0] = {{2.5, 0.0}, {0.7, 0.0}};
  const DQMatrix a = prescribed_spectrum_matrix(eigs, rng).matrix;
  const DQVector v0 = random_initial_vector(8, rng);
  const DualComplex cp = class_representative(power_method(a, v0).eigenvalue);
  const DualComplex cd = class_representative(dcam_power_method(a, v0).eigenvalue);
  EXPECT_LE(std::abs(cp.s - 2.5), 1e-8);
  EXPECT_LE(std::abs(cp.d - 0.7), 1e-8);
  EXPECT_LE(std::abs(cp.s - cd.s), 1e-8);
  EXPECT_LE(std::abs(cp.d - cd.d), 1e-8);
}

TEST(PowerMethod, DriftingDualFixture) {
  const DivergenceFixture f = drifting_dual_fixture();
  const double h = 1.0 / std::sqrt(2.0);
  int checked = 0;
  const EigResult r = power_method(f.matrix, f.v0, {}, [&](const IterationState& st) {
    // The iterate fed into step k is v^(k-1) = h [1 + (k-1) i eps, (1 + (k-1) i eps) j].
    const double m = st.k - 1;
    EXPECT_LE(dist(st.lambda, dq(1)), 1e-12);
    EXPECT_LE(dist(st.v[0], {Quaternion(h), h * m * I}), 1e-9);
    EXPECT_LE(dist(st.v[1], {h * J, h * m * (I * J)}), 1e-9);
    ++checked;
  });
  EXPECT_EQ(r.status, Status::MaxIter);
  EXPECT_EQ(checked, 1000);
}

TEST(PowerMethod, DefectiveDualFixture) {
  const DivergenceFixture f = defective_dual_fixture();
  const EigResult r = power_method(f.matrix, f.v0);
  EXPECT_EQ(r.status, Status::MaxIter);
  for (const auto& lam : r.eigenvalue_trace) EXPECT_LE(dist(lam, {Quaternion(1.0), Quaternion(5.0 / 3.0)}), 1e-10);
}

TEST(PowerMethod, DefectiveDualFirstIterate) {
  // First normalization of y = A v0 with y_s = [1,1,1], y_d = [2,2,1].
  const DivergenceFixture f = defective_dual_fixture();
  SolverConfig cfg;
  cfg.k_max = 2;
  std::vector<DQVector> seen;
  power_method(f.matrix, f.v0, cfg, [&](const IterationState& st) { seen.push_back(st.v); });
  ASSERT_EQ(seen.size(), 2u);
  const double r3 = std::sqrt(3.0);
  const double ds[] = {1.0 / 3.0, 1.0 / 3.0, -2.0 / 3.0};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(seen[1][i].s.w, 1.0 / r3, 1e-14);
    EXPECT_NEAR(seen[1][i].d.w, ds[i] / r3, 1e-14);
  }
}

TEST(PowerMethod, StalledRotationFixture) {
  const DivergenceFixture f = stalled_rotation_fixture();
  const double a = 1.0 / std::sqrt(2.0), b = 1.0 / (2.0 * std::sqrt(2.0));
  const DQVector expected{DualQuaternion(Quaternion(a), Quaternion(b)), DualQuaternion(a * J, -b * J)};
  const EigResult r = power_method(f.matrix, f.v0, {}, [&](const IterationState& st) {
    if ((st.k - 1) % 4 == 0) EXPECT_LE(norm_2R(st.v - expected), 1e-12) << "k=" << st.k;
  });
  EXPECT_EQ(r.status, Status::MaxIter);
}

TEST(PowerMethod, ConvergesToNullVectorOfNilpotent) {
  DQMatrix a(2, 2);
  a(0, 1) = dq(1);
  const EigResult r = power_method(a, DQVector{dq(0), dq(1)});
  EXPECT_EQ(r.status, Status::Converged);
  EXPECT_EQ(r.iterations, 2);
  EXPECT_EQ(r.eigenvalue, dq(0));
}

TEST(PowerMethod, BreakdownOnInfinitesimalImage) {
  DQMatrix a(2, 2);
  a(0, 1) = dq(0, 1);
  const EigResult r = power_method(a, DQVector{dq(0), dq(1)});
  EXPECT_EQ(r.status, Status::Breakdown);
}

TEST(PowerMethod, RejectsBadInput) {
  EXPECT_THROW(power_method(DQMatrix::identity(2), DQVector(3)), DimensionError);
  EXPECT_THROW(power_method(DQMatrix::identity(2), DQVector(2)), DomainError);
  SolverConfig bad;
  bad.tol = 0.0;
  EXPECT_THROW(power_method(DQMatrix::identity(2), unit_start(), bad), DomainError);
}

TEST(EstimateRate, GeometricTrace) {
  std::vector<double> t;
  for (int k = 1; k <= 40; ++k) t.push_back(std::pow(0.5, k));
  EXPECT_NEAR(estimate_rate(t, false), 0.5, 0.01);
}

TEST(EstimateRate, PolynomialFactor) {
  std::vector<double> t;
  for (int k = 1; k <= 80; ++k) t.push_back(k >= 20 ? k * std::pow(0.7, k) : 1.0);
  EXPECT_NEAR(estimate_rate(t, false), 0.7, 0.03);
}

TEST(EstimateRate, EvenCycle) {
  Rng rng(35);
  const DQMatrix a = cycle_laplacian(4, rng).laplacian;
  const EigResult r = power_method(a, random_initial_vector(4, rng));
  EXPECT_NEAR(estimate_rate(r.trace), std::numbers::sqrt2 / 2.0, 0.05);
}

TEST(EstimateRate, TooShort) {
  const std::vector<double> t = {1e-3, 1e-4, 1e-5};
  EXPECT_THROW(estimate_rate(t), UndefinedRateError);
}

}  // namespace
}  // namespace dqeig
