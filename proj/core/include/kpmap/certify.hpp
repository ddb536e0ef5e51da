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

#ifndef KPMAP_CERTIFY_HPP
#define KPMAP_CERTIFY_HPP

#include <cstdint>

#include "kpmap/numerics.hpp"

namespace kpmap {

// Search effort for the rank-constrained minimizer. `seed` is the master
// seed consumed by callers that do not take one explicitly; per-restart
// seeds are derived from the master by a fixed counter scheme.
struct SearchBudget {
  int restarts = 64;
  int max_iterations = 500;
  std::uint64_t seed = 42;
};

// Best violating candidate found by a search: a unit vector of Schmidt
// rank <= k together with its quadratic-form value. `iterations_used`
// counts the iterations of the winning restart.
struct Certificate {
  CVector vector;
  double value = 0.0;
  Index rank = 0;
  int restarts_used = 0;
  int iterations_used = 0;
};

//=========================================================================
// Step machinery (exposed so tests can drive single iterations)
//=========================================================================

// Shift c for the descent operator c*1 - w, from one eigendecomposition:
// c = lambda_max - min(lambda_min, 0) + eps, which keeps the shifted
// operator positive definite with its top eigenvector at lambda_min.
double spectral_shift(const CMatrix &w);

// Truncate to the top-k singular triples of the n x m reshape.
CVector project_rank(const CVector &v, Index n, Index m, Index k);

// One iteration: normalize(project_rank((shift*1 - w) v)).
CVector descent_step(const CMatrix &w, double shift, const CVector &v, Index n,
                     Index m, Index k);

// Real quadratic form <w v, v> of a Hermitian w.
double rayleigh_value(const CMatrix &w, const CVector &v);

//=========================================================================
// Searches
//=========================================================================

// Minimize <w v, v> over unit vectors of Schmidt rank <= k by projected
// power descent with random restarts. Deterministic for fixed inputs;
// among restarts with equal value, the lowest restart index wins.
Certificate minimize_rank_constrained(const CMatrix &w, Index n, Index m,
                                      Index k, const SearchBudget &budget,
                                      std::uint64_t rng_seed);

// Local refinement from a caller-supplied start, single restart.
Certificate polish(const CMatrix &w, const CVector &v0, Index n, Index m,
                   Index k, const Tolerance &tol = Tolerance(),
                   const SearchBudget &budget = SearchBudget());

// Sampling oracle: minimum of the form over `samples` independent
// rank-<=k unit vectors. Upper-bounds the true minimum.
double brute_force_min(const CMatrix &w, Index n, Index m, Index k,
                       int samples, std::uint64_t rng_seed);

} // namespace kpmap

#endif
