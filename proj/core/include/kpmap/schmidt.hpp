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

#ifndef KPMAP_SCHMIDT_HPP
#define KPMAP_SCHMIDT_HPP

#include <cstdint>
#include <vector>

#include "kpmap/numerics.hpp"

namespace kpmap {

// Decomposition v = sum_p coefficients(p) * left(p) (x) right(p) of a
// nonzero vector in C^n (x) C^m, coefficients positive and descending,
// both systems orthonormal. s = coefficients.size() is the Schmidt rank.
struct SchmidtForm {
  Index s = 0;
  RVector coefficients;
  CMatrix left_system;  // n x s, orthonormal columns
  CMatrix right_system; // m x s, orthonormal columns

  // Reassemble sum_p lambda_p left_p (x) right_p.
  CVector reconstruct() const;
};

// Schmidt decomposition via the SVD of the n x m reshape of v. A singular
// value counts toward the rank iff sigma > tol.abs_eps + tol.rel_eps * sigma_max.
SchmidtForm schmidt_decompose(const CVector &v, Index n, Index m,
                              const Tolerance &tol = Tolerance());

// Number of Schmidt coefficients above the rank threshold.
Index schmidt_rank(const CVector &v, Index n, Index m,
                   const Tolerance &tol = Tolerance());

// sum_p xs[p] (x) ys[p]; the Schmidt rank of a nonzero result is at most
// the number of terms, for arbitrary (not necessarily orthogonal) systems.
CVector build_from_systems(const std::vector<CVector> &xs,
                           const std::vector<CVector> &ys);

// Unit vector with Schmidt rank exactly k (almost surely): reshape of
// Q1 diag(g) Q2^* with random truncated isometries Q1, Q2 and complex
// Gaussian g. Deterministic for a fixed seed.
CVector sample_rank_k(Index n, Index m, Index k, std::uint64_t rng_seed);

} // namespace kpmap

#endif
