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

#ifndef KPMAP_POSITIVITY_HPP
#define KPMAP_POSITIVITY_HPP

#include <cstdint>
#include <optional>

#include "kpmap/certify.hpp"
#include "kpmap/maps.hpp"
#include "kpmap/numerics.hpp"

namespace kpmap {

//=========================================================================
// Verdicts
//=========================================================================

enum class PositivityStatus { positive, violated, inconclusive };

// A violating vector: unit norm, Schmidt rank <= the queried k, with a
// strictly negative quadratic-form value.
struct ViolationCertificate {
  CVector vector;
  double value = 0.0;
  Index schmidt_rank = 0;
};

// Outcome of a positivity query. `positive` is only ever produced by an
// exact spectral argument (PSD Choi matrix, or the k >= min(n,m) collapse
// to complete positivity); a failed heuristic search yields `inconclusive`.
struct PositivityVerdict {
  std::optional<Index> query_k; // nullopt: complete-positivity query
  PositivityStatus status = PositivityStatus::inconclusive;
  std::optional<ViolationCertificate> certificate;
  double best_value = 0.0; // minimum of <C v, v> found over the search class
};

// Default decision threshold: eigenvalues/form values above -1e-9 count as
// non-negative. Looser than the numerics default so genuine violations
// (O(1) in the zoo) sit far from roundoff.
Tolerance verdict_tolerance();

//=========================================================================
// Queries
//=========================================================================

// True iff max|C - C^*| <= tol.abs_eps for the Choi matrix C.
bool is_hermiticity_preserving(const LinearMap &t,
                               const Tolerance &tol = verdict_tolerance());

// The real number <C v, v>. Requires a hermiticity-preserving map; the
// imaginary residue is checked against 1e-10 * |v|^2 * max|C| and dropped.
double quadratic_form(const LinearMap &t, const CVector &v);

// Complete positivity: exact test via the spectrum of the Choi matrix.
// On violation the certificate is the eigenvector of the most negative
// eigenvalue. Throws NotHermiticityPreserving for non-HP input.
PositivityVerdict is_completely_positive(const LinearMap &t,
                                         const Tolerance &tol = verdict_tolerance());

// k-positivity. Exact `positive` when the Choi matrix is PSD; exact
// delegation to the complete-positivity test when k >= min(n,m);
// otherwise a rank-constrained search that can return `violated` (with
// certificate) or `inconclusive`, never `positive`.
PositivityVerdict is_k_positive(const LinearMap &t, Index k,
                                const Tolerance &tol = verdict_tolerance(),
                                const SearchBudget &budget = SearchBudget());

//=========================================================================
// Definitional oracle
//=========================================================================

// Smallest output eigenvalue of the ancilla extension 1_k (x) T over
// random rank-1 PSD inputs.
struct CrosscheckReport {
  int trials = 0;
  double min_eigenvalue = 0.0;
};

// Sample `trials` random rank-1 projectors P on C^k (x) C^n and record the
// smallest eigenvalue of (1_k (x) T)(P). Capped at k * dim_in <= 64.
CrosscheckReport ancilla_crosscheck(const LinearMap &t, Index k, int trials,
                                    std::uint64_t rng_seed);

// Feed the rank-1 input induced by a Schmidt-rank-<=k certificate through
// the ancilla extension and return the smallest output eigenvalue; negative
// whenever the certificate's form value is negative.
double certificate_crosscheck(const LinearMap &t, Index k, const CVector &v);

} // namespace kpmap

#endif
