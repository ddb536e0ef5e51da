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

#include "kpmap/jamiolkowski.hpp"

#include <cmath>
#include <string>

namespace kpmap {

CMatrix WeylBasis::element(Index i, Index j) const {
  CMatrix e = CMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

BasisChange::BasisChange(CMatrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() < 1)
    throw NotUnitary("BasisChange: matrix must be square");
  const Index n = u_.rows();
  const double defect = max_abs(u_.adjoint() * u_ - CMatrix::Identity(n, n));
  if (defect > kUnitaryEps)
    throw NotUnitary("BasisChange: max|U^*U - 1| = " + std::to_string(defect));
}

CMatrix BasisChange::element(Index i, Index j) const {
  return u_.col(i) * u_.col(j).adjoint(); // U E_ij U^* = f_i f_j^*
}

CMatrix j1(const LinearMap &t) {
  const Index n = t.dim_in();
  const Index m = t.dim_out();
  const CMatrix &c = t.choi2();
  CMatrix out(n * m, n * m);
  // Partial transpose on the first factor: block (i,j) <- block (j,i).
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out.block(i * m, j * m, m, m) = c.block(j * m, i * m, m, m);
  return out;
}

CMatrix j2(const LinearMap &t) { return t.choi2(); }

LinearMap j2_inverse(const CMatrix &c, Index n, Index m) {
  if (c.rows() != n * m || c.cols() != n * m)
    throw DimensionMismatch("j2_inverse: matrix is " + std::to_string(c.rows()) +
                            "x" + std::to_string(c.cols()) + ", expected " +
                            std::to_string(n * m) + " square");
  return LinearMap(n, m, c);
}

CMatrix j2_in_basis(const LinearMap &t, const BasisChange &b) {
  const Index n = t.dim_in();
  const Index m = t.dim_out();
  if (b.dim() != n)
    throw DimensionMismatch("j2_in_basis: basis dimension " +
                            std::to_string(b.dim()) + " does not match map");
  CMatrix out = CMatrix::Zero(n * m, n * m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const CMatrix f = b.element(i, j);
      out += tensor(f, t.apply(f));
    }
  return out;
}

double isometry_defect(const LinearMap &t1, const LinearMap &t2) {
  const Index n = t1.dim_in();
  const Index m = t1.dim_out();
  if (t2.dim_in() != n || t2.dim_out() != m)
    throw DimensionMismatch("isometry_defect: maps act on different algebras");

  const Complex g1 = frobenius_inner(j1(t1), j1(t2));
  const Complex g2 = frobenius_inner(j2(t1), j2(t2));

  Complex g3(0.0, 0.0);
  const WeylBasis basis{n};
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const CMatrix e = basis.element(i, j);
      g3 += frobenius_inner(t1.apply(e), t2.apply(e));
    }
  return std::abs(g1 - g2) + std::abs(g2 - g3);
}

double hermiticity_defect(const LinearMap &t) {
  const Index n = t.dim_in();
  const WeylBasis basis{n};
  double worst = 0.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      // E_ij^* = E_ji
      const CMatrix lhs = t.apply(basis.element(j, i));
      const CMatrix rhs = t.apply(basis.element(i, j)).adjoint();
      worst = std::max(worst, max_abs(lhs - rhs));
    }
  return worst;
}

} // namespace kpmap
