#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "dqeig/dense.hpp"

namespace dqeig {

/// Generator type used by every fixture; seeded explicitly by callers.
using Rng = std::mt19937_64;

/// Unit dual quaternion directed graph.
struct Udqdg {
  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    DualQuaternion weight;
  };

  std::size_t n = 0;
  std::vector<Arc> arcs;
  std::vector<std::size_t> out_degree;
  bool balanced = false;
  /// Vertex gauges u with weight(i, j) = u_i* u_j; empty for unbalanced graphs.
  std::vector<DualQuaternion> gauges;

  /// L = D - A with D the out-degree diagonal and A(i, j) = weight of arc (i, j).
  DQMatrix laplacian() const;

  /// Real Laplacian of the underlying unweighted digraph, embedded as a DQM.
  DQMatrix underlying_laplacian() const;
};

struct GraphFixture {
  Udqdg graph;
  DQMatrix laplacian;
};

/// Random unit dual quaternion: q_s uniform on S^3, q_d Gaussian projected so
/// that dot(q_s, q_d) = 0.
DualQuaternion random_unit_dual_quaternion(Rng& rng);

/// Quaternion with i.i.d. standard normal components.
Quaternion random_gaussian_quaternion(Rng& rng);

/// Matrix with i.i.d. Gaussian quaternion entries in both parts.
DQMatrix random_dual_quaternion_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Directed cycle 1 -> 2 -> ... -> n -> 1. The balanced variant closes the
/// cycle with the reversed conjugate product of the other weights. n >= 3.
GraphFixture cycle_laplacian(std::size_t n, Rng& rng, bool balanced = true);

/// Directed cycle on vertices 0..n-2 plus center n-1 with arcs to every
/// cycle vertex. The balanced variant assigns random vertex gauges. n >= 4.
GraphFixture wheel_laplacian(std::size_t n, Rng& rng, bool balanced = true);

struct PrescribedSpectrum {
  DQMatrix matrix;     // P diag(eigs) P^{-1}
  DQMatrix transform;  // P; column i is an eigenvector for eigs[i]
};

/// Random diagonalizable matrix with the given right eigenvalues. The random
/// transform is resampled until ||P_s||_F ||P_s^{-1}||_F <= 1e4 and the
/// inversion residual is <= 1e-8; gives up with SingularMatrixError after 10
/// attempts.
PrescribedSpectrum prescribed_spectrum_matrix(std::span<const DualComplex> eigs, Rng& rng);

/// P^{-1} B P with B_s = diag(1.1+1.1i, J_{n21}(1+i), (1+i) I_{n-1-n21}) and
/// B_d = I. Requires 1 <= n21 <= n-1.
DQMatrix jordan_experiment_matrix(std::size_t n, std::size_t n21, Rng& rng);

/// Unit-Gaussian standard part, zero dual part, normalized.
DQVector random_initial_vector(std::size_t n, Rng& rng);

}  // namespace dqeig
