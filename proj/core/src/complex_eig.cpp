#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dqeig/oracle.hpp"

namespace dqeig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Diagonal similarity scaling by powers of two so row and column norms are
// comparable. Eigenvalues are unchanged.
void balance(CMatrix& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const std::size_t n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double inv_f = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv_f;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

// Householder reduction to upper Hessenberg form.
void hessenberg(CMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    double alpha = 0.0;
    for (std::size_t i = 0; i < m; ++i) alpha += std::norm(h(k + 1 + i, k));
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;

    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    for (std::size_t i = 0; i < m; ++i) v[i] = h(k + 1 + i, k);
    v[0] += phase * alpha;
    double vn = 0.0;
    for (std::size_t i = 0; i < m; ++i) vn += std::norm(v[i]);
    vn = std::sqrt(vn);
    if (vn == 0.0) continue;
    for (std::size_t i = 0; i < m; ++i) v[i] /= vn;

    // H <- (I - 2 v v^H) H
    for (std::size_t j = k; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += std::conj(v[i]) * h(k + 1 + i, j);
      s *= 2.0;
      for (std::size_t i = 0; i < m; ++i) h(k + 1 + i, j) -= v[i] * s;
    }
    // H <- H (I - 2 v v^H)
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t l = 0; l < m; ++l) s += h(i, k + 1 + l) * v[l];
      s *= 2.0;
      for (std::size_t l = 0; l < m; ++l) h(i, k + 1 + l) -= s * std::conj(v[l]);
    }
    for (std::size_t i = 1; i < m; ++i) h(k + 1 + i, k) = 0.0;
  }
}

struct Givens {
  double c;
  Complex s;
};

// G = [c s; -conj(s) c] with G [a; b] = [r; 0].
Givens make_givens(Complex a, Complex b) {
  const double ab = std::abs(b);
  if (ab == 0.0) return {1.0, 0.0};
  const double aa = std::abs(a);
  if (aa == 0.0) return {0.0, std::conj(b) / ab};
  const double r = std::hypot(aa, ab);
  return {aa / r, (a / aa) * std::conj(b) / r};
}

Complex wilkinson_shift(const CMatrix& h, std::size_t hi) {
  const Complex a = h(hi - 1, hi - 1);
  const Complex b = h(hi - 1, hi);
  const Complex c = h(hi, hi - 1);
  const Complex d = h(hi, hi);
  const Complex mean = 0.5 * (a + d);
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex mu1 = mean + disc;
  const Complex mu2 = mean - disc;
  return std::abs(mu1 - d) <= std::abs(mu2 - d) ? mu1 : mu2;
}

// One explicit single-shift QR step on the active block [lo, hi].
void qr_step(CMatrix& h, std::size_t lo, std::size_t hi, Complex mu, std::vector<Givens>& rot) {
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
  rot.resize(hi - lo);
  for (std::size_t k = lo; k < hi; ++k) {
    const Givens g = make_givens(h(k, k), h(k + 1, k));
    rot[k - lo] = g;
    for (std::size_t j = k; j <= hi; ++j) {
      const Complex x = h(k, j);
      const Complex y = h(k + 1, j);
      h(k, j) = g.c * x + g.s * y;
      h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
    }
    h(k + 1, k) = 0.0;
  }
  for (std::size_t k = lo; k < hi; ++k) {
    const Givens& g = rot[k - lo];
    const std::size_t last = std::min(k + 2, hi);
    for (std::size_t i = lo; i <= last; ++i) {
      const Complex x = h(i, k);
      const Complex y = h(i, k + 1);
      h(i, k) = g.c * x + std::conj(g.s) * y;
      h(i, k + 1) = -g.s * x + g.c * y;
    }
  }
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
}

}  // namespace

std::vector<Complex> complex_eigs(const CMatrix& m) {
  if (!m.square()) throw DimensionError("complex_eigs: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Complex> eigs;
  eigs.reserve(n);
  if (n == 0) return eigs;

  CMatrix h = m;
  balance(h);
  hessenberg(h);

  double hnorm = 0.0;
  for (const Complex& z : h.data()) hnorm = std::max(hnorm, std::abs(z));
  const double tiny = std::numeric_limits<double>::min() / kEps;

  std::vector<Givens> rot;
  const std::size_t max_sweeps = 30 * n;
  std::size_t sweeps = 0;
  std::size_t since_deflation = 0;
  std::size_t hi = n - 1;
  while (true) {
    // Locate the start of the unreduced block ending at hi.
    std::size_t lo = hi;
    while (lo > 0) {
      double scale = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (scale == 0.0) scale = hnorm;
      if (std::abs(h(lo, lo - 1)) <= std::max(kEps * scale, tiny)) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eigs.push_back(h(hi, hi));
      since_deflation = 0;
      if (hi == 0) break;
      --hi;
      continue;
    }
    if (++sweeps > max_sweeps) throw ConvergenceError("complex_eigs: QR iteration did not converge");
    ++since_deflation;

    Complex mu;
    if (since_deflation % 11 == 10) {
      // Exceptional shift to break cycles.
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      mu = wilkinson_shift(h, hi);
    }
    qr_step(h, lo, hi, mu, rot);
  }
  std::reverse(eigs.begin(), eigs.end());
  return eigs;
}

std::vector<double> singular_values(const CMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Complex>> a(cols, std::vector<Complex>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[j][i] = m(i, j);

  constexpr int kMaxSweeps = 80;
  bool rotated = true;
  for (int sweep = 0; sweep < kMaxSweeps && rotated; ++sweep) {
    rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
          alpha += std::norm(a[p][i]);
          beta += std::norm(a[q][i]);
          gamma += std::conj(a[p][i]) * a[q][i];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        // Rotate a_p against e^{-i phi} a_q so their inner product is real.
        const Complex phase = std::conj(gamma) / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const Complex x = a[p][i];
          const Complex y = a[q][i] * phase;
          a[p][i] = c * x - s * y;
          a[q][i] = s * x + c * y;
        }
      }
    }
  }
  if (rotated) throw ConvergenceError("singular_values: Jacobi sweeps did not converge");

  std::vector<double> sv(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (const Complex& z : a[j]) s += std::norm(z);
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  if (rows < cols) sv.resize(rows);
  return sv;
}

}  // namespace dqeig
