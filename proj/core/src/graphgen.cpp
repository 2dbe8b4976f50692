#include "dqeig/graphgen.hpp"

#include <cmath>
#include <string>

#include "dqeig/linalg.hpp"

namespace dqeig {

namespace {

double gaussian(Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

Udqdg make_graph(std::size_t n, bool balanced) {
  Udqdg g;
  g.n = n;
  g.out_degree.assign(n, 0);
  g.balanced = balanced;
  return g;
}

void add_arc(Udqdg& g, std::size_t from, std::size_t to, const DualQuaternion& w) {
  g.arcs.push_back({from, to, w});
  ++g.out_degree[from];
}

struct ConditionedInverse {
  DQMatrix p;
  DQMatrix p_inv;
};

ConditionedInverse random_invertible(std::size_t n, Rng& rng) {
  constexpr int kAttempts = 10;
  const QMatrix eye = QMatrix::identity(n);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    DQMatrix p = random_dual_quaternion_matrix(n, n, rng);
    try {
      DQMatrix p_inv = inverse(p);
      const QMatrix ps = standard_part(p);
      const QMatrix ps_inv = standard_part(p_inv);
      const double cond = frobenius(ps) * frobenius(ps_inv);
      const double resid = frobenius(ps * ps_inv - eye);
      if (cond <= 1e4 && resid <= 1e-8) return {std::move(p), std::move(p_inv)};
    } catch (const SingularMatrixError&) {
    }
  }
  throw SingularMatrixError("random invertible transform: no well-conditioned sample in 10 attempts");
}

}  // namespace

DQMatrix Udqdg::laplacian() const {
  DQMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) l(i, i) = DualQuaternion(static_cast<double>(out_degree[i]));
  for (const Arc& a : arcs) l(a.from, a.to) -= a.weight;
  return l;
}

DQMatrix Udqdg::underlying_laplacian() const {
  DQMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) l(i, i) = DualQuaternion(static_cast<double>(out_degree[i]));
  for (const Arc& a : arcs) l(a.from, a.to) -= DualQuaternion(1.0);
  return l;
}

Quaternion random_gaussian_quaternion(Rng& rng) {
  const double w = gaussian(rng);
  const double x = gaussian(rng);
  const double y = gaussian(rng);
  const double z = gaussian(rng);
  return {w, x, y, z};
}

DualQuaternion random_unit_dual_quaternion(Rng& rng) {
  Quaternion s;
  double ns = 0.0;
  do {
    s = random_gaussian_quaternion(rng);
    ns = abs(s);
  } while (!(ns > 1e-8));
  s = s / ns;
  const Quaternion g = random_gaussian_quaternion(rng);
  const Quaternion d = g - s * dot(s, g);
  return {s, d};
}

DQMatrix random_dual_quaternion_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  DQMatrix m(rows, cols);
  for (auto& e : m.data()) {
    e.s = random_gaussian_quaternion(rng);
    e.d = random_gaussian_quaternion(rng);
  }
  return m;
}

GraphFixture cycle_laplacian(std::size_t n, Rng& rng, bool balanced) {
  if (n < 3) throw DomainError("cycle_laplacian: n must be at least 3, got " + std::to_string(n));
  Udqdg g = make_graph(n, balanced);
  if (balanced) {
    // u_1 = 1, u_{k+1} = u_k w_{k,k+1}; the closing weight u_n* u_1 is then
    // w_{n-1,n}* ... w_{1,2}*.
    g.gauges.assign(n, DualQuaternion(1.0));
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const DualQuaternion w = random_unit_dual_quaternion(rng);
      add_arc(g, k, k + 1, w);
      g.gauges[k + 1] = g.gauges[k] * w;
    }
    add_arc(g, n - 1, 0, conj(g.gauges[n - 1]) * g.gauges[0]);
  } else {
    for (std::size_t k = 0; k < n; ++k) add_arc(g, k, (k + 1) % n, random_unit_dual_quaternion(rng));
  }
  DQMatrix l = g.laplacian();
  return {std::move(g), std::move(l)};
}

GraphFixture wheel_laplacian(std::size_t n, Rng& rng, bool balanced) {
  if (n < 4) throw DomainError("wheel_laplacian: n must be at least 4, got " + std::to_string(n));
  const std::size_t rim = n - 1;
  const std::size_t center = n - 1;
  Udqdg g = make_graph(n, balanced);
  if (balanced) {
    g.gauges.resize(n);
    for (auto& u : g.gauges) u = random_unit_dual_quaternion(rng);
  }
  auto weight = [&](std::size_t i, std::size_t j) {
    return balanced ? conj(g.gauges[i]) * g.gauges[j] : random_unit_dual_quaternion(rng);
  };
  for (std::size_t k = 0; k < rim; ++k) add_arc(g, k, (k + 1) % rim, weight(k, (k + 1) % rim));
  for (std::size_t k = 0; k < rim; ++k) add_arc(g, center, k, weight(center, k));
  DQMatrix l = g.laplacian();
  return {std::move(g), std::move(l)};
}

PrescribedSpectrum prescribed_spectrum_matrix(std::span<const DualComplex> eigs, Rng& rng) {
  if (eigs.empty()) throw DomainError("prescribed_spectrum_matrix: empty spectrum");
  const std::size_t n = eigs.size();
  ConditionedInverse t = random_invertible(n, rng);
  // P diag(eigs) scales column j of P on the right by eigs[j].
  DQMatrix scaled = t.p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = t.p(i, j) * DualQuaternion::from_dual_complex(eigs[j]);
  return {scaled * t.p_inv, std::move(t.p)};
}

DQMatrix jordan_experiment_matrix(std::size_t n, std::size_t n21, Rng& rng) {
  if (n21 < 1 || n21 + 1 > n) {
    throw DomainError("jordan_experiment_matrix: need 1 <= n21 <= n-1");
  }
  const Quaternion lead{1.1, 1.1, 0.0, 0.0};
  const Quaternion sub{1.0, 1.0, 0.0, 0.0};
  DQMatrix b(n, n);
  b(0, 0).s = lead;
  for (std::size_t i = 1; i < n; ++i) b(i, i).s = sub;
  for (std::size_t i = 1; i < n21; ++i) b(i, i + 1).s = Quaternion(1.0);
  for (std::size_t i = 0; i < n; ++i) b(i, i).d = Quaternion(1.0);

  const ConditionedInverse t = random_invertible(n, rng);
  return t.p_inv * b * t.p;
}

DQVector random_initial_vector(std::size_t n, Rng& rng) {
  DQVector v(n);
  for (auto& e : v) e.s = random_gaussian_quaternion(rng);
  return normalize(v);
}

}  // namespace dqeig
