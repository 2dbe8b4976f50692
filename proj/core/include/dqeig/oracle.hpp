#pragma once

#include <cstddef>
#include <vector>

#include "dqeig/dense.hpp"

namespace dqeig {

// Independent verification: spectra of standard parts through the complex
// adjoint, analytic graph spectra, multiplicity estimates and the
// standard-part verdicts of the convergence assumptions.

/// All eigenvalues of a square complex matrix (balancing, Householder
/// Hessenberg reduction, single-shift Wilkinson QR). Throws ConvergenceError
/// after 30n sweeps without deflation.
std::vector<Complex> complex_eigs(const CMatrix& m);

/// Singular values (descending) by one-sided Jacobi.
std::vector<double> singular_values(const CMatrix& m);

/// Standard eigenvalues of A_s: adjoint eigenvalues with nonnegative
/// imaginary part, real ones counted once per conjugate pair. Sorted by
/// descending magnitude, then descending real part.
std::vector<Complex> standard_eigs(const DQMatrix& a);
std::vector<Complex> standard_eigs(const QMatrix& a_s);

/// Maps z to the representative with nonnegative imaginary part.
inline Complex to_standard(Complex z) { return z.imag() < 0.0 ? std::conj(z) : z; }

/// Sorts by descending magnitude, then descending real part.
void sort_spectrum(std::vector<Complex>& eigs);

/// {1 - e^{2 pi i k / n} : k = 0..n-1}. n >= 3.
std::vector<Complex> analytic_cycle_spectrum(std::size_t n);

/// analytic_cycle_spectrum(n-1) plus {n-1}. n >= 4.
std::vector<Complex> analytic_wheel_spectrum(std::size_t n);

struct SpectrumReport {
  std::vector<Complex> standard_eigs;
  Complex dominant{};
  double gap_ratio = 0.0;  // |lambda_2s| / |lambda_1s|
  bool dominant_simple = false;
  std::size_t alg_mult = 0;
  std::size_t geo_mult = 0;
  bool assumption1 = false;
  bool assumption2i = false;
  bool assumption2ii = false;
  /// Conditions on the dual part of the dominant eigenvalue are never tested.
  bool dual_conditions_checked = false;
};

/// Classifies the standard spectrum of A. Eigenvalues within
/// tol_cluster * |lambda_1s| of the dominant one form its cluster; the
/// geometric multiplicity is the nullity of J(A_s) - lambda_1s I at rank
/// tolerance 1e-8 ||J(A_s)||_F, halved for real lambda_1s. Throws DomainError
/// when lambda_1s = 0.
SpectrumReport assumption_report(const DQMatrix& a, double tol_cluster = 1e-6);

struct EigenpairVerdict {
  bool ok = false;
  double relative_residual = 0.0;  // ||A v - v lambda||_{2^R} / ||A||_{F^R}
  double standard_residual = 0.0;  // ||A_s x_s - x_s lambda_s||
  double dual_residual = 0.0;      // ||A_s x_d + A_d x_s - x_d lambda_s - x_s lambda_d||
};

EigenpairVerdict verify_eigenpair(const DQMatrix& a, const DQVector& v, const DualQuaternion& lambda,
                                  double tol);

/// Greedy nearest matching of two spectra; returns the largest pairwise
/// distance, or +inf if the sizes differ.
double max_matching_error(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace dqeig
