#pragma once

#include "dqeig/dense.hpp"

namespace dqeig {

// Dual complex adjoint of a dual quaternion matrix.
//
// Each quaternion entry is split as q = (w + x i) + (y + z i) j = a1 + a2 j and
// the m x n matrix A1 + A2 j maps to the 2m x 2n block matrix
//
//   [  A1        A2      ]
//   [ -conj(A2)  conj(A1) ]
//
// independently for the standard and dual parts. Vectors map through
// F(v) = (v1; -conj(v2)).

/// Complex adjoint of a quaternion matrix.
CMatrix complex_adjoint(const QMatrix& q);

/// Dual complex adjoint J(Q) of a dual quaternion matrix.
DCMatrix dcam_map(const DQMatrix& q);

/// F(v): DQ^n -> DC^{2n}.
DCVector f_map(const DQVector& v);

/// F^{-1}(u): DC^{2n} -> DQ^n. Throws DimensionError on odd length.
DQVector f_inv(const DCVector& u);

/// True iff m has the adjoint block pattern in both parts, within tol.
bool has_adjoint_structure(const DCMatrix& m, double tol = 0.0);

}  // namespace dqeig
