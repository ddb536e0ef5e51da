/**
 * This code is part of kpmap.
 *
 * (C) Copyright kpmap developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#ifndef KPMAP_JAMIOLKOWSKI_HPP
#define KPMAP_JAMIOLKOWSKI_HPP

#include "kpmap/maps.hpp"
#include "kpmap/numerics.hpp"

namespace kpmap {

//=========================================================================
// Operator bases
//=========================================================================

// The matrix-unit basis E_ij of C^{n x n} (single one at row i, column j).
// Orthonormal under the Hilbert-Schmidt product; E_ij^* = E_ji.
struct WeylBasis {
  Index n;
  CMatrix element(Index i, Index j) const;
};

// Rotated matrix-unit basis F_ij = U E_ij U^* built from a unitary U.
// Rejects input whose unitarity defect exceeds kUnitaryEps rather than
// orthonormalizing it.
class BasisChange {
public:
  static constexpr double kUnitaryEps = 1e-8;

  explicit BasisChange(CMatrix u);

  const CMatrix &unitary() const { return u_; }
  Index dim() const { return u_.rows(); }
  CMatrix element(Index i, Index j) const;

private:
  CMatrix u_;
};

//=========================================================================
// The two transforms
//=========================================================================

// First transform: sum_ij E_ij^* (x) T(E_ij). Basis-independent and
// isometric; realized as the partial transpose of the Choi matrix on the
// first tensor factor.
CMatrix j1(const LinearMap &t);

// Second (modified) transform: sum_ij E_ij (x) T(E_ij). This is the Choi
// matrix and the canonical internal representation of LinearMap.
CMatrix j2(const LinearMap &t);

// Block-extraction inverse: T(E_ij) := block (i,j) of c, extended linearly.
LinearMap j2_inverse(const CMatrix &c, Index n, Index m);

// The second transform evaluated in the rotated basis:
// sum_ij F_ij (x) T(F_ij). Coincides with j2 exactly when U^t U = 1.
CMatrix j2_in_basis(const LinearMap &t, const BasisChange &b);

// Combined isometry residual
//   |<J1(t1),J1(t2)> - <J2(t1),J2(t2)>| +
//   |<J2(t1),J2(t2)> - sum_ij <T1(E_ij),T2(E_ij)>|,
// zero up to roundoff for all pairs of maps.
double isometry_defect(const LinearMap &t1, const LinearMap &t2);

// max_ij max|T(E_ij^*) - T(E_ij)^*|; vanishes exactly when T preserves
// hermiticity, equivalently when the Choi matrix is Hermitian.
double hermiticity_defect(const LinearMap &t);

} // namespace kpmap

#endif
