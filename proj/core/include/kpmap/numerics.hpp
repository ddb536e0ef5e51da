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

#ifndef KPMAP_NUMERICS_HPP
#define KPMAP_NUMERICS_HPP

#include <complex>

#include <Eigen/Dense>

#include "kpmap/errors.hpp"

namespace kpmap {

//=========================================================================
// Basic types
//=========================================================================

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd; // dense complex matrix, the universal carrier
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Absolute/relative tolerance pair used throughout the library.
class Tolerance {
public:
  Tolerance() = default;
  Tolerance(double abs_eps, double rel_eps);

  double abs_eps() const { return abs_eps_; }
  double rel_eps() const { return rel_eps_; }

private:
  double abs_eps_ = 1e-10;
  double rel_eps_ = 1e-10;
};

// Result of a Hermitian eigendecomposition, eigenvalues descending.
struct HermitianEig {
  RVector eigenvalues;  // descending
  CMatrix eigenvectors; // columns, matching order
};

// Thin singular value decomposition a = u * diag(sigma) * v^*,
// singular values descending, u and v with orthonormal columns.
struct Svd {
  CMatrix u;
  RVector singular_values;
  CMatrix v;
};

//=========================================================================
// Operations
//=========================================================================

// Kronecker (tensor) product: entry ((i*b.rows+p),(j*b.cols+q)) = a(i,j)*b(p,q).
CMatrix tensor(const CMatrix &a, const CMatrix &b);

// Eigendecomposition of a Hermitian matrix. Throws NotHermitian if
// max|h - h^*| exceeds tol.abs_eps, ConvergenceFailure if the backend fails.
HermitianEig hermitian_eig(const CMatrix &h, const Tolerance &tol = Tolerance());

// Singular value decomposition of an arbitrary matrix.
Svd svd(const CMatrix &a);

// Identifies C^n (x) C^m with n x m matrices: result(i,j) = v(i*m + j).
CMatrix reshape_to_matrix(const CVector &v, Index n, Index m);

// Inverse of reshape_to_matrix (row-major flattening).
CVector reshape_to_vector(const CMatrix &a);

// Hilbert-Schmidt scalar product <a,b> = Tr(b^* a), linear in the left slot.
Complex frobenius_inner(const CMatrix &a, const CMatrix &b);

// Entrywise max-abs norm.
double max_abs(const CMatrix &a);

} // namespace kpmap

#endif
