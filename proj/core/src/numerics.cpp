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

#include "kpmap/numerics.hpp"

#include <string>

namespace kpmap {

Tolerance::Tolerance(double abs_eps, double rel_eps)
    : abs_eps_(abs_eps), rel_eps_(rel_eps) {
  if (abs_eps < 0.0 || rel_eps < 0.0)
    throw Error("Tolerance components must be non-negative");
}

CMatrix tensor(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

HermitianEig hermitian_eig(const CMatrix &h, const Tolerance &tol) {
  if (h.rows() != h.cols())
    throw NotHermitian("hermitian_eig: matrix is not square (" +
                       std::to_string(h.rows()) + "x" +
                       std::to_string(h.cols()) + ")");
  const double defect = max_abs(h - h.adjoint());
  if (defect > tol.abs_eps())
    throw NotHermitian("hermitian_eig: max|h - h^*| = " +
                       std::to_string(defect) + " exceeds tolerance");

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("hermitian_eig: eigensolver did not converge");

  // Eigen sorts ascending; flip to descending.
  const Index d = h.rows();
  HermitianEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = CMatrix(d, d);
  for (Index c = 0; c < d; ++c)
    out.eigenvectors.col(c) = solver.eigenvectors().col(d - 1 - c);
  return out;
}

Svd svd(const CMatrix &a) {
  Eigen::JacobiSVD<CMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("svd: decomposition did not converge");
  return Svd{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

CMatrix reshape_to_matrix(const CVector &v, Index n, Index m) {
  if (n < 1 || m < 1 || v.size() != n * m)
    throw DimensionMismatch("reshape_to_matrix: vector of dim " +
                            std::to_string(v.size()) + " is not " +
                            std::to_string(n) + "*" + std::to_string(m));
  CMatrix out(n, m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j)
      out(i, j) = v(i * m + j);
  return out;
}

CVector reshape_to_vector(const CMatrix &a) {
  CVector out(a.rows() * a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out(i * a.cols() + j) = a(i, j);
  return out;
}

Complex frobenius_inner(const CMatrix &a, const CMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("frobenius_inner: shapes " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  return b.conjugate().cwiseProduct(a).sum();
}

double max_abs(const CMatrix &a) { return a.cwiseAbs().maxCoeff(); }

} // namespace kpmap
