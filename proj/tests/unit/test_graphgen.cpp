#include <gtest/gtest.h>

#include <cmath>

#include "dqeig/graphgen.hpp"
#include "dqeig/linalg.hpp"

namespace dqeig {
namespace {

double dist(const DualQuaternion& a, const DualQuaternion& b) {
  const DualQuaternion d = a - b;
  return std::sqrt(norm2(d.s) + norm2(d.d));
}

TEST(RandomUnit, IsUnit) {
  Rng rng(41);
  for (int t = 0; t < 1000; ++t) {
    const DualQuaternion q = random_unit_dual_quaternion(rng);
    EXPECT_NEAR(norm2(q.s), 1.0, 1e-14);
    EXPECT_NEAR(dot(q.s, q.d), 0.0, 1e-14);
    EXPECT_LE(dist(q * conj(q), DualQuaternion(1.0)), 1e-13);
  }
}

// Frozen against libstdc++'s normal_distribution; other standard libraries
// may draw a different sequence.
TEST(RandomUnit, GoldenSeed) {
  Rng rng(42);
  const DualQuaternion q = random_unit_dual_quaternion(rng);
  const DualQuaternion expected{{0.31571011162897977, -0.25709298175336048, -0.85385796009604953, -0.32427905903557269},
                                {-0.053405600108474852, 1.1034176551201162, -0.13637078353506513, -0.56772196313745027}};
  EXPECT_LE(dist(q, expected), 1e-15);
}

TEST(RandomUnit, StandardPartIsUniformOnSphere) {
  Rng rng(43);
  const int n = 20000;
  double mean[4] = {}, second = 0.0;
  for (int t = 0; t < n; ++t) {
    const Quaternion s = random_unit_dual_quaternion(rng).s;
    const double c[4] = {s.w, s.x, s.y, s.z};
    for (int i = 0; i < 4; ++i) mean[i] += c[i] / n;
    second += s.w * s.w / n;
  }
  for (double m : mean) EXPECT_LE(std::abs(m), 0.03);
  EXPECT_NEAR(second, 0.25, 0.01);
}

TEST(Cycle, BalancedProductIsOne) {
  Rng rng(44);
  for (std::size_t n : {3u, 4u, 7u, 16u}) {
    const GraphFixture g = cycle_laplacian(n, rng);
    ASSERT_EQ(g.graph.arcs.size(), n);
    DualQuaternion prod(1.0);
    for (const auto& arc : g.graph.arcs) prod = prod * arc.weight;
    EXPECT_LE(dist(prod, DualQuaternion(1.0)), 1e-12) << n;
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(g.laplacian(i, i), DualQuaternion(1.0));
  }
}

TEST(Cycle, UnbalancedWeightsAreUnit) {
  Rng rng(45);
  const GraphFixture g = cycle_laplacian(5, rng, false);
  EXPECT_FALSE(g.graph.balanced);
  for (const auto& arc : g.graph.arcs) EXPECT_LE(dist(arc.weight * conj(arc.weight), DualQuaternion(1.0)), 1e-13);
}

TEST(Wheel, GaugeSimilarity) {
  Rng rng(46);
  const GraphFixture g = wheel_laplacian(6, rng);
  ASSERT_TRUE(g.graph.balanced);
  ASSERT_EQ(g.graph.gauges.size(), 6u);
  const std::size_t n = 6;
  DQMatrix u(n, n), ustar(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = g.graph.gauges[i];
    ustar(i, i) = conj(g.graph.gauges[i]);
  }
  const DQMatrix rebuilt = ustar * g.graph.underlying_laplacian() * u;
  EXPECT_LE(norm_FR(rebuilt - g.laplacian), 1e-12);
  EXPECT_EQ(g.laplacian(n - 1, n - 1), DualQuaternion(5.0));
}

TEST(Fixtures, Deterministic) {
  Rng a(47), b(47);
  EXPECT_EQ(cycle_laplacian(8, a).laplacian, cycle_laplacian(8, b).laplacian);
  EXPECT_EQ(wheel_laplacian(8, a).laplacian, wheel_laplacian(8, b).laplacian);
  EXPECT_EQ(random_initial_vector(8, a), random_initial_vector(8, b));
}

TEST(Fixtures, SizeChecks) {
  Rng rng(48);
  EXPECT_THROW(cycle_laplacian(2, rng), DomainError);
  EXPECT_THROW(wheel_laplacian(3, rng), DomainError);
  EXPECT_THROW(jordan_experiment_matrix(5, 0, rng), DomainError);
  EXPECT_THROW(jordan_experiment_matrix(5, 5, rng), DomainError);
}

TEST(Prescribed, ColumnsAreEigenvectors) {
  Rng rng(49);
  const std::vector<DualComplex> eigs = {{{2.0, 1.0}, {0.5, 0.0}}, {{-1.0, 0.0}, {0.0, 2.0}}, {{0.3, -0.7}, {1.0, 1.0}}};
  const PrescribedSpectrum ps = prescribed_spectrum_matrix(eigs, rng);
  for (std::size_t k = 0; k < eigs.size(); ++k) {
    const DQVector v = ps.transform.column(k);
    EXPECT_LE(residual_2R(ps.matrix, v, DualQuaternion::from_dual_complex(eigs[k])), 1e-10 * norm_FR(ps.matrix));
  }
}

TEST(InitialVector, UnitAndStandardOnly) {
  Rng rng(50);
  const DQVector v = random_initial_vector(10, rng);
  const DualNumber n = norm_2(v);
  EXPECT_NEAR(n.s, 1.0, 1e-14);
  EXPECT_EQ(n.d, 0.0);
  for (const auto& e : v) EXPECT_EQ(e.d, Quaternion());
}

}  // namespace
}  // namespace dqeig
