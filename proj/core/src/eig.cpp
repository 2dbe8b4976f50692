#include "dqeig/eig.hpp"

#include <chrono>
#include <cmath>

#include "dqeig/dcam.hpp"
#include "dqeig/linalg.hpp"

namespace dqeig {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Converged:
      return "Converged";
    case Status::MaxIter:
      return "MaxIter";
    case Status::Breakdown:
      return "Breakdown";
  }
  return "unknown";
}

void SolverConfig::validate() const {
  if (!(tol > 0.0)) throw DomainError("solver config: tolerance must be positive");
  if (k_max < 1) throw DomainError("solver config: k_max must be at least 1");
  if (!(breakdown_tol >= 0.0)) throw DomainError("solver config: breakdown tolerance must be nonnegative");
}

namespace {

template <class D>
Vector<D> initial_iterate(const Vector<D>& v0) {
  const DualNumber nv = norm_2(v0);
  if (std::abs(nv.s - 1.0) <= 1e-14 && std::abs(nv.d) <= 1e-14) return v0;
  try {
    return normalize(v0);
  } catch (const BreakdownError&) {
    throw DomainError("power method: initial vector is not appreciable");
  }
}

struct LoopOutcome {
  Status status = Status::MaxIter;
  int iterations = 0;
};

// Algorithm skeleton shared by both solvers. `v` holds the iterate on entry
// and the iterate paired with `lambda` on exit.
template <class D, class OnIteration>
LoopOutcome iterate(const Matrix<D>& a, Vector<D>& v, D& lambda, const SolverConfig& cfg,
                    OnIteration&& on_iteration) {
  LoopOutcome out;
  for (int k = 1; k <= cfg.k_max; ++k) {
    Vector<D> y = a * v;
    lambda = inner(v, y);
    const double res = norm_2R(y - scale_right(v, lambda));
    out.iterations = k;
    on_iteration(k, v, lambda, res);

    if (res <= cfg.tol) {
      out.status = Status::Converged;
      return out;
    }
    const double ys = std::sqrt(detail::part_sums<D>(y.span()).ss);
    if (!std::isfinite(res) || !(ys >= cfg.breakdown_tol) || !std::isfinite(ys)) {
      out.status = Status::Breakdown;
      return out;
    }
    if (k == cfg.k_max) break;
    v = normalize(y, cfg.breakdown_tol);
  }
  out.status = Status::MaxIter;
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

EigResult power_method(const DQMatrix& a, const DQVector& v0, const SolverConfig& cfg,
                       const IterationObserver& observer) {
  cfg.validate();
  if (!a.square() || a.cols() != v0.size()) throw DimensionError("power method: dimension mismatch");

  const auto t0 = std::chrono::steady_clock::now();
  EigResult r;
  r.trace.reserve(static_cast<std::size_t>(cfg.k_max));
  r.eigenvalue_trace.reserve(static_cast<std::size_t>(cfg.k_max));

  DQVector v = initial_iterate(v0);
  DualQuaternion lambda;
  const LoopOutcome out =
      iterate(a, v, lambda, cfg, [&](int k, const DQVector& cur, const DualQuaternion& lam, double res) {
        r.trace.push_back(res);
        r.eigenvalue_trace.push_back(lam);
        if (observer) observer(IterationState{k, cur, lam, res});
      });

  r.status = out.status;
  r.iterations = out.iterations;
  r.eigenvalue = lambda;
  r.eigenvector = std::move(v);
  r.wall_time = seconds_since(t0);
  return r;
}

EigResult dcam_power_method(const DQMatrix& a, const DQVector& v0, const SolverConfig& cfg,
                            const IterationObserver& observer) {
  cfg.validate();
  if (!a.square() || a.cols() != v0.size()) throw DimensionError("DCAM power method: dimension mismatch");

  const auto t0 = std::chrono::steady_clock::now();
  EigResult r;
  r.trace.reserve(static_cast<std::size_t>(cfg.k_max));
  r.eigenvalue_trace.reserve(static_cast<std::size_t>(cfg.k_max));

  const DCMatrix b = dcam_map(a);
  DCVector w = f_map(initial_iterate(v0));
  DualComplex lambda;
  const LoopOutcome out =
      iterate(b, w, lambda, cfg, [&](int k, const DCVector& cur, const DualComplex& lam, double res) {
        const DualQuaternion embedded = DualQuaternion::from_dual_complex(lam);
        r.trace.push_back(res);
        r.eigenvalue_trace.push_back(embedded);
        if (observer) {
          const DQVector mapped = f_inv(cur);
          observer(IterationState{k, mapped, embedded, res});
        }
      });

  r.status = out.status;
  r.iterations = out.iterations;
  r.eigenvalue = DualQuaternion::from_dual_complex(lambda);
  r.eigenvector = f_inv(w);
  r.wall_time = seconds_since(t0);
  return r;
}

double estimate_rate(std::span<const double> trace, bool converged) {
  const std::size_t n = trace.size();
  const std::size_t skip = (n + 9) / 10;
  const double floor_cut = converged && n > 0 ? 10.0 * trace.back() : 0.0;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = skip; i < n; ++i) {
    const double r = trace[i];
    if (!(r > 1e-14 && r < 1e-2)) continue;
    if (converged && r <= floor_cut) continue;
    const double x = static_cast<double>(i + 1);
    const double y = std::log10(r);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 10) throw UndefinedRateError("estimate_rate: fewer than 10 qualifying residuals");
  const double md = static_cast<double>(m);
  const double slope = (md * sxy - sx * sy) / (md * sxx - sx * sx);
  return std::pow(10.0, slope);
}

}  // namespace dqeig
