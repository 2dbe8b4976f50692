#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "dqeig/dense.hpp"

namespace dqeig {

enum class Status { Converged, MaxIter, Breakdown };

std::string_view to_string(Status s);

struct SolverConfig {
  int k_max = 1000;
  double tol = 1e-10;             // residual threshold delta on ||y - v lambda||_{2^R}
  double breakdown_tol = 1e-150;  // ||y_s|| below this stops the iteration

  /// Throws DomainError unless tol > 0 and k_max >= 1.
  void validate() const;
};

struct EigResult {
  DualQuaternion eigenvalue;
  DQVector eigenvector;
  Status status = Status::MaxIter;
  int iterations = 0;
  std::vector<double> trace;                   // residual of iteration k at index k-1
  std::vector<DualQuaternion> eigenvalue_trace;  // lambda of iteration k at index k-1
  double wall_time = 0.0;                      // seconds
};

/// One iteration's state, handed to an optional observer. `v` is the
/// normalized iterate the eigenvalue estimate was formed from.
struct IterationState {
  int k;
  const DQVector& v;
  const DualQuaternion& lambda;
  double residual;
};

using IterationObserver = std::function<void(const IterationState&)>;

/// Power method over dual quaternions.
///
/// Each iteration forms y = A v, lambda = v* y and stops when
/// ||y - v lambda||_{2^R} <= tol; otherwise v <- y / ||y||_2. The returned
/// eigenpair is the (v, lambda) of the final iteration. v0 is normalized
/// first unless it already has unit dual norm.
EigResult power_method(const DQMatrix& a, const DQVector& v0, const SolverConfig& cfg = {},
                       const IterationObserver& observer = {});

/// Same iteration run on the dual complex adjoint J(A) starting from F(v0).
/// The eigenvector is mapped back through F^{-1}; the eigenvalue is dual
/// complex, embedded with zero j and k components. The observer, when set,
/// receives F^{-1} of the current iterate.
EigResult dcam_power_method(const DQMatrix& a, const DQVector& v0, const SolverConfig& cfg = {},
                            const IterationObserver& observer = {});

/// Per-iteration convergence ratio 10^slope of a least-squares fit of
/// log10(residual) against iteration number. Uses entries in (1e-14, 1e-2),
/// skipping the first 10% of iterations and, when `converged`, the floor
/// plateau within 10x of the final residual. Throws UndefinedRateError with
/// fewer than 10 qualifying entries.
double estimate_rate(std::span<const double> trace, bool converged = true);

}  // namespace dqeig
