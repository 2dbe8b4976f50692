#include "dqeig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "dqeig/dcam.hpp"
#include "dqeig/linalg.hpp"

namespace dqeig {

namespace {

constexpr double kPairTol = 1e-6;   // relative, conjugate-pair consistency
constexpr double kLinkTol = 1e-3;   // relative, single-linkage cluster radius
constexpr double kRankTol = 1e-8;   // relative to ||J(A_s)||_F

// Single-linkage clusters of points in the closed upper half plane.
std::vector<std::vector<std::size_t>> link_clusters(const std::vector<Complex>& pts, double link) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) <= link) parent[find(i)] = find(j);

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

Complex mean(const std::vector<Complex>& v) {
  Complex s = 0.0;
  for (const Complex& z : v) s += z;
  return v.empty() ? s : s / static_cast<double>(v.size());
}

}  // namespace

void sort_spectrum(std::vector<Complex>& eigs) {
  std::stable_sort(eigs.begin(), eigs.end(), [](Complex a, Complex b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return a.real() > b.real();
  });
}

std::vector<Complex> standard_eigs(const QMatrix& a_s) {
  const std::vector<Complex> raw = complex_eigs(complex_adjoint(a_s));
  double scale = 1.0;
  for (const Complex& z : raw) scale = std::max(scale, std::abs(z));

  // Every standard eigenvalue shows up twice in the adjoint spectrum, as z and
  // conj(z). Defective clusters scatter individual eigenvalues, so the
  // conjugate pairing is checked on cluster centroids.
  std::vector<Complex> folded(raw.size());
  std::transform(raw.begin(), raw.end(), folded.begin(), to_standard);
  const auto clusters = link_clusters(folded, kLinkTol * scale);

  std::vector<Complex> out;
  out.reserve(raw.size() / 2);
  for (const auto& members : clusters) {
    if (members.size() % 2 != 0) {
      throw InconsistencyError("standard_eigs: adjoint eigenvalue cluster of odd size");
    }
    std::vector<Complex> upper, lower, all;
    for (std::size_t i : members) {
      all.push_back(folded[i]);
      if (raw[i].imag() > 0.0) upper.push_back(raw[i]);
      else lower.push_back(raw[i]);
    }
    const Complex centre = mean(all);
    if (centre.imag() > kLinkTol * scale) {
      if (upper.size() != lower.size() ||
          std::abs(mean(upper) - std::conj(mean(lower))) > kPairTol * scale) {
        throw InconsistencyError("standard_eigs: adjoint spectrum is not closed under conjugation");
      }
      out.insert(out.end(), upper.begin(), upper.end());
    } else {
      // Real cluster: members come in (near) conjugate pairs; average them.
      std::sort(all.begin(), all.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
      for (std::size_t k = 0; k + 1 < all.size(); k += 2) {
        const Complex avg = 0.5 * (all[k] + all[k + 1]);
        out.emplace_back(avg.real(), std::max(0.0, avg.imag()));
      }
    }
  }
  sort_spectrum(out);
  return out;
}

std::vector<Complex> standard_eigs(const DQMatrix& a) { return standard_eigs(standard_part(a)); }

std::vector<Complex> analytic_cycle_spectrum(std::size_t n) {
  if (n < 3) throw DomainError("analytic_cycle_spectrum: n must be at least 3");
  std::vector<Complex> eigs;
  eigs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    eigs.push_back(Complex(1.0, 0.0) - std::polar(1.0, theta));
  }
  return eigs;
}

std::vector<Complex> analytic_wheel_spectrum(std::size_t n) {
  if (n < 4) throw DomainError("analytic_wheel_spectrum: n must be at least 4");
  std::vector<Complex> eigs = analytic_cycle_spectrum(n - 1);
  eigs.emplace_back(static_cast<double>(n - 1), 0.0);
  return eigs;
}

SpectrumReport assumption_report(const DQMatrix& a, double tol_cluster) {
  const QMatrix as = standard_part(a);
  SpectrumReport rep;
  rep.standard_eigs = standard_eigs(as);
  if (rep.standard_eigs.empty()) throw DomainError("assumption_report: empty matrix");

  const Complex lead = rep.standard_eigs.front();
  const double lead_mag = std::abs(lead);
  double scale = lead_mag;
  for (const Complex& z : rep.standard_eigs) scale = std::max(scale, std::abs(z));
  if (!(lead_mag > 1e-12 * std::max(1.0, scale))) {
    throw DomainError("assumption_report: dominant standard eigenvalue is zero");
  }

  std::vector<Complex> cluster;
  double second = 0.0;
  for (const Complex& z : rep.standard_eigs) {
    if (std::abs(z - lead) <= tol_cluster * lead_mag) {
      cluster.push_back(z);
    } else {
      second = std::max(second, std::abs(z));
    }
  }
  rep.dominant = mean(cluster);
  rep.alg_mult = cluster.size();
  rep.gap_ratio = std::min(1.0, second / lead_mag);

  CMatrix pencil = complex_adjoint(as);
  const double mnorm = frobenius(pencil);
  const bool real_lead = std::abs(rep.dominant.imag()) <= tol_cluster * lead_mag;
  const Complex shift = real_lead ? Complex(rep.dominant.real(), 0.0) : rep.dominant;
  for (std::size_t i = 0; i < pencil.rows(); ++i) pencil(i, i) -= shift;
  const std::vector<double> sv = singular_values(pencil);
  const std::size_t nullity = static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s <= kRankTol * mnorm; }));
  rep.geo_mult = real_lead ? nullity / 2 : nullity;

  const bool strict_gap = rep.gap_ratio < 1.0 - tol_cluster;
  rep.dominant_simple = strict_gap && rep.alg_mult == 1;
  rep.assumption1 = strict_gap && rep.alg_mult == rep.geo_mult;
  rep.assumption2i = rep.assumption1 && real_lead;
  rep.assumption2ii = strict_gap && rep.alg_mult == 1 && rep.geo_mult == 1;
  rep.dual_conditions_checked = false;
  return rep;
}

EigenpairVerdict verify_eigenpair(const DQMatrix& a, const DQVector& v, const DualQuaternion& lambda,
                                  double tol) {
  if (!a.square() || a.cols() != v.size()) throw DimensionError("verify_eigenpair: dimension mismatch");
  const DQVector r = (a * v) - scale_right(v, lambda);
  EigenpairVerdict out;
  const double anorm = norm_FR(a);
  out.relative_residual = norm_2R(r) / (anorm > 0.0 ? anorm : 1.0);
  out.standard_residual = euclidean(standard_part(r));
  out.dual_residual = euclidean(dual_part(r));
  out.ok = out.relative_residual <= tol;
  return out;
}

double max_matching_error(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  std::vector<bool> used(b.size(), false);
  for (const Complex& z : a) {
    std::size_t best = b.size();
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(z - b[j]);
      if (d < dist) {
        dist = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, dist);
  }
  return worst;
}

}  // namespace dqeig
