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

#include "kpmap/certify.hpp"

#include <algorithm>
#include <string>

#include "kpmap/rng.hpp"
#include "kpmap/schmidt.hpp"

namespace kpmap {

namespace {

constexpr double kFlatImprovement = 1e-12;
constexpr int kFlatWindow = 10;

void check_problem(const CMatrix &w, Index n, Index m, Index k) {
  if (w.rows() != n * m || w.cols() != n * m)
    throw DimensionMismatch("certify: matrix is " + std::to_string(w.rows()) +
                            "x" + std::to_string(w.cols()) + ", expected " +
                            std::to_string(n * m) + " square");
  const double defect = max_abs(w - w.adjoint());
  if (defect > 1e-10)
    throw NotHermitian("certify: max|w - w^*| = " + std::to_string(defect));
  if (k < 1 || k > std::min(n, m))
    throw BadRank("certify: k = " + std::to_string(k) + " outside 1..min(" +
                  std::to_string(n) + "," + std::to_string(m) + ")");
}

struct DescentResult {
  CVector vector;
  double value = 0.0;
  int iterations = 0;
};

// Projected power descent from a unit, rank-feasible start. Tracks the
// best iterate seen: a projection step may momentarily raise the value.
DescentResult run_descent(const CMatrix &w, double shift, CVector v, Index n,
                          Index m, Index k, int max_iterations) {
  DescentResult best{v, rayleigh_value(w, v), 0};
  int flat = 0;
  for (int it = 1; it <= max_iterations; ++it) {
    v = descent_step(w, shift, v, n, m, k);
    const double value = rayleigh_value(w, v);
    const double improvement = best.value - value;
    if (value < best.value) {
      best.vector = v;
      best.value = value;
      best.iterations = it;
    }
    if (improvement < kFlatImprovement) {
      if (++flat >= kFlatWindow)
        break;
    } else {
      flat = 0;
    }
  }
  return best;
}

} // namespace

double spectral_shift(const CMatrix &w) {
  const HermitianEig eig = hermitian_eig(w);
  const double lambda_max = eig.eigenvalues(0);
  const double lambda_min = eig.eigenvalues(eig.eigenvalues.size() - 1);
  const double eps = 1e-6 * std::max(1.0, lambda_max - lambda_min);
  return lambda_max - std::min(lambda_min, 0.0) + eps;
}

CVector project_rank(const CVector &v, Index n, Index m, Index k) {
  if (k >= std::min(n, m))
    return v;
  const Svd dec = svd(reshape_to_matrix(v, n, m));
  const Index kk = std::min<Index>(k, dec.singular_values.size());
  const CMatrix truncated = dec.u.leftCols(kk) *
                            dec.singular_values.head(kk).asDiagonal() *
                            dec.v.leftCols(kk).adjoint();
  return reshape_to_vector(truncated);
}

CVector descent_step(const CMatrix &w, double shift, const CVector &v, Index n,
                     Index m, Index k) {
  CVector u = shift * v - w * v;
  u = project_rank(u, n, m, k);
  return u / u.norm();
}

double rayleigh_value(const CMatrix &w, const CVector &v) {
  return v.dot(w * v).real();
}

Certificate minimize_rank_constrained(const CMatrix &w, Index n, Index m,
                                      Index k, const SearchBudget &budget,
                                      std::uint64_t rng_seed) {
  check_problem(w, n, m, k);
  if (budget.restarts < 1 || budget.max_iterations < 1)
    throw Error("certify: budget must allow at least one restart/iteration");
  const double shift = spectral_shift(w);

  Certificate best;
  bool have_best = false;
  for (int r = 0; r < budget.restarts; ++r) {
    const CVector v0 = sample_rank_k(n, m, k, derive_seed(rng_seed, r));
    const DescentResult res =
        run_descent(w, shift, v0, n, m, k, budget.max_iterations);
    if (!have_best || res.value < best.value) {
      best.vector = res.vector;
      best.value = res.value;
      best.iterations_used = res.iterations;
      have_best = true;
    }
  }
  best.restarts_used = budget.restarts;
  best.rank = schmidt_rank(best.vector, n, m);
  return best;
}

Certificate polish(const CMatrix &w, const CVector &v0, Index n, Index m,
                   Index k, const Tolerance &tol, const SearchBudget &budget) {
  check_problem(w, n, m, k);
  if (v0.size() != n * m)
    throw BadStart("polish: start vector has dim " + std::to_string(v0.size()) +
                   ", expected " + std::to_string(n * m));
  if (v0.norm() <= tol.abs_eps())
    throw BadStart("polish: start vector is zero to tolerance");
  if (schmidt_rank(v0, n, m, tol) > k)
    throw BadStart("polish: start vector has Schmidt rank above k");

  const double shift = spectral_shift(w);
  const DescentResult res = run_descent(w, shift, v0 / v0.norm(), n, m, k,
                                        budget.max_iterations);
  Certificate cert;
  cert.vector = res.vector;
  cert.value = res.value;
  cert.iterations_used = res.iterations;
  cert.restarts_used = 1;
  cert.rank = schmidt_rank(cert.vector, n, m);
  return cert;
}

double brute_force_min(const CMatrix &w, Index n, Index m, Index k, int samples,
                       std::uint64_t rng_seed) {
  check_problem(w, n, m, k);
  if (samples < 1)
    throw EmptyInput("brute_force_min: samples must be >= 1");
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const CVector v = sample_rank_k(n, m, k, derive_seed(rng_seed, i));
    const double value = rayleigh_value(w, v);
    if (i == 0 || value < best)
      best = value;
  }
  return best;
}

} // namespace kpmap
