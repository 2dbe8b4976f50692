#include <gtest/gtest.h>

#include <cmath>

#include "dqeig/graphgen.hpp"
#include "dqeig/linalg.hpp"

namespace dqeig {
namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();

DualQuaternion dq(double s, double d = 0.0) { return {Quaternion(s), Quaternion(d)}; }

DQVector real_vector(std::initializer_list<double> s, std::initializer_list<double> d) {
  QVector vs(std::vector<Quaternion>(s.begin(), s.end()));
  QVector vd(std::vector<Quaternion>(d.begin(), d.end()));
  return make_dual(vs, vd);
}

TEST(Products, IdentityAndBlockRule) {
  const DQVector v = real_vector({1, 2}, {3, 4});
  EXPECT_EQ(DQMatrix::identity(2) * v, v);

  DQMatrix a = DQMatrix::identity(2);
  a(0, 1).d = Quaternion(5.0);
  const DQVector x = real_vector({1, 1}, {0, 0});
  const DQVector y = a * x;
  EXPECT_EQ(y[0], dq(1, 5));
  EXPECT_EQ(y[1], dq(1, 0));

  const DQMatrix b{{dq(2, 1), dq(1)}, {dq(0), dq(2)}};
  const DQVector e = b * real_vector({1, 0}, {0, 0});
  EXPECT_EQ(e[0], dq(2, 1));
  EXPECT_EQ(e[1], dq(0));
}

TEST(Products, AssociativeOnRandomTriples) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const DQMatrix a = random_dual_quaternion_matrix(3, 3, rng);
    const DQMatrix b = random_dual_quaternion_matrix(3, 3, rng);
    const DQMatrix c = random_dual_quaternion_matrix(3, 3, rng);
    const DQMatrix l = (a * b) * c;
    EXPECT_LE(norm_FR(l - a * (b * c)), 1e-11 * norm_FR(l));
  }
}

TEST(ConjTranspose, Basics) {
  EXPECT_EQ(conj_transpose(DQMatrix::identity(3)), DQMatrix::identity(3));
  const DQMatrix m{{DualQuaternion(I)}};
  EXPECT_EQ(conj_transpose(m)(0, 0), DualQuaternion(-I));

  Rng rng(12);
  const DQMatrix a = random_dual_quaternion_matrix(3, 3, rng);
  const DQMatrix b = random_dual_quaternion_matrix(3, 3, rng);
  EXPECT_LE(norm_FR(conj_transpose(a * b) - conj_transpose(b) * conj_transpose(a)), 1e-12 * norm_FR(a * b));
}

TEST(Norms, VectorTwoNorm) {
  EXPECT_EQ(norm_2(real_vector({1, 0}, {0, 0})), DualNumber(1.0));
  const DualNumber n = norm_2(real_vector({1, 1, 1}, {2, 2, 1}));
  EXPECT_NEAR(n.s, std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(n.d, 5.0 / std::sqrt(3.0), 1e-15);
  EXPECT_EQ(norm_2(real_vector({0, 0}, {3, 4})), DualNumber(0.0, 5.0));
}

TEST(Norms, VectorTwoRNorm) {
  EXPECT_EQ(norm_2R(real_vector({1, 0}, {0, 0})), 1.0);
  EXPECT_DOUBLE_EQ(norm_2R(real_vector({1}, {1})), std::sqrt(2.0));
  EXPECT_EQ(norm_2R(real_vector({3, 0}, {0, 4})), 5.0);
}

TEST(Norms, MatrixFrobenius) {
  const DualNumber n1 = norm_F(DQMatrix::identity(2));
  EXPECT_DOUBLE_EQ(n1.s, std::sqrt(2.0));
  EXPECT_EQ(n1.d, 0.0);

  DQMatrix d(2, 2);
  d(0, 0).d = Quaternion(3.0);
  d(1, 1).d = Quaternion(4.0);
  EXPECT_EQ(norm_F(d), DualNumber(0.0, 5.0));

  const DQMatrix both = make_dual(QMatrix::identity(2), QMatrix::identity(2));
  const DualNumber n3 = norm_F(both);
  EXPECT_DOUBLE_EQ(n3.s, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(n3.d, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(norm_FR(both), 2.0);
}

TEST(QuaternionInverse, Examples) {
  EXPECT_EQ(inverse(QMatrix::identity(3)), QMatrix::identity(3));
  const QMatrix d{{I, Quaternion()}, {Quaternion(), J}};
  const QMatrix di = inverse(d);
  EXPECT_EQ(di(0, 0), -I);
  EXPECT_EQ(di(1, 1), -J);

  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const QMatrix m = standard_part(random_dual_quaternion_matrix(4, 4, rng));
    const QMatrix mi = inverse(m);
    EXPECT_LE(frobenius(m * mi - QMatrix::identity(4)), 1e-10);
    EXPECT_LE(frobenius(mi * m - QMatrix::identity(4)), 1e-10);
  }
}

TEST(QuaternionInverse, SingularThrows) {
  const QMatrix s{{Quaternion(1.0), I}, {Quaternion(1.0), I}};
  EXPECT_THROW(inverse(s), SingularMatrixError);
}

TEST(DualInverse, Examples) {
  EXPECT_EQ(inverse(DQMatrix::identity(2)), DQMatrix::identity(2));

  QMatrix dpart(2, 2);
  dpart(0, 1) = I;
  dpart(1, 0) = Quaternion(2.0);
  const DQMatrix a = make_dual(QMatrix::identity(2), dpart);
  const DQMatrix ai = inverse(a);
  EXPECT_EQ(standard_part(ai), QMatrix::identity(2));
  EXPECT_EQ(dual_part(ai)(0, 1), -I);
  EXPECT_EQ(dual_part(ai)(1, 0), Quaternion(-2.0));

  Rng rng(14);
  for (int t = 0; t < 20; ++t) {
    const DQMatrix m = random_dual_quaternion_matrix(3, 3, rng);
    EXPECT_LE(norm_FR(m * inverse(m) - DQMatrix::identity(3)), 1e-9);
  }
}

TEST(Normalize, Examples) {
  const DQVector a = normalize(real_vector({2, 0}, {0, 0}));
  EXPECT_EQ(a, real_vector({1, 0}, {0, 0}));

  const DQVector b = normalize(real_vector({1, 1, 1}, {2, 2, 1}));
  const double r3 = std::sqrt(3.0);
  const double ds[] = {1.0 / 3.0, 1.0 / 3.0, -2.0 / 3.0};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(b[i].s.w, 1.0 / r3, 1e-15);
    EXPECT_NEAR(b[i].d.w, ds[i] / r3, 1e-15);
  }

  Rng rng(15);
  DQVector x(6);
  for (auto& e : x) e = {random_gaussian_quaternion(rng), random_gaussian_quaternion(rng)};
  const DQVector once = normalize(x);
  const DualNumber n = norm_2(once);
  EXPECT_NEAR(n.s, 1.0, 1e-12);
  EXPECT_NEAR(n.d, 0.0, 1e-12);
  const DQVector twice = normalize(once);
  EXPECT_LE(norm_2R(twice - once), 1e-14);
}

TEST(Normalize, NonAppreciableIsBreakdown) {
  EXPECT_THROW(normalize(real_vector({0, 0}, {1, 0})), BreakdownError);
}

TEST(Residual, Examples) {
  const DQMatrix a{{dq(2, 1), dq(0)}, {dq(0), dq(1)}};
  EXPECT_EQ(residual_2R(a, real_vector({1, 0}, {0, 0}), dq(2, 1)), 0.0);
  EXPECT_EQ(residual_2R(DQMatrix::identity(2), real_vector({1, 0}, {0, 0}), dq(0)), 1.0);

  // A = I + i I eps on the closed-form iterate with k = 1 and lambda = 1.
  const DQMatrix f = make_dual(QMatrix::identity(2), QMatrix::diagonal(std::vector<Quaternion>{I, I}));
  const double h = 1.0 / std::sqrt(2.0);
  DQVector v(2);
  v[0] = {Quaternion(h), h * I};
  v[1] = {h * J, h * (I * J)};
  EXPECT_NEAR(residual_2R(f, v, dq(1)), 1.0, 1e-15);
}

TEST(Hermitian, Predicate) {
  DQMatrix h = DQMatrix::identity(2);
  h(0, 1) = {I, J};
  h(1, 0) = {-I, -J};
  EXPECT_TRUE(is_hermitian(h));
  h(1, 0) = {I, J};
  EXPECT_FALSE(is_hermitian(h));
}

TEST(Dimensions, MismatchThrows) {
  EXPECT_THROW(DQMatrix(2, 3) * DQVector(2), DimensionError);
  EXPECT_THROW(DQMatrix(2, 3) * DQMatrix(2, 3), DimensionError);
}

}  // namespace
}  // namespace dqeig
