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

#include "kpmap/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kpmap/jamiolkowski.hpp"
#include "kpmap/rng.hpp"
#include "kpmap/schmidt.hpp"

namespace kpmap {

namespace {

constexpr Index kAncillaDimCap = 64;

void require_hermiticity_preserving(const LinearMap &t, const Tolerance &tol) {
  const double defect = hermiticity_defect(t);
  if (defect > tol.abs_eps())
    throw NotHermiticityPreserving(
        "map is not hermiticity-preserving (defect " + std::to_string(defect) +
        "); positivity queries are rejected");
}

ViolationCertificate make_certificate(const LinearMap &t, const CVector &v,
                                      double value) {
  ViolationCertificate cert;
  cert.vector = v;
  cert.value = value;
  cert.schmidt_rank = schmidt_rank(v, t.dim_in(), t.dim_out());
  return cert;
}

} // namespace

Tolerance verdict_tolerance() { return Tolerance(1e-9, 1e-9); }

bool is_hermiticity_preserving(const LinearMap &t, const Tolerance &tol) {
  const CMatrix &c = t.choi2();
  return max_abs(c - c.adjoint()) <= tol.abs_eps();
}

double quadratic_form(const LinearMap &t, const CVector &v) {
  const Index d = t.dim_in() * t.dim_out();
  if (v.size() != d)
    throw DimensionMismatch("quadratic_form: vector of dim " +
                            std::to_string(v.size()) + ", expected " +
                            std::to_string(d));
  require_hermiticity_preserving(t, verdict_tolerance());

  const Complex z = v.dot(t.choi2() * v);
  const double bound = 1e-10 * v.squaredNorm() * max_abs(t.choi2());
  if (std::abs(z.imag()) > bound)
    throw NotHermiticityPreserving("quadratic_form: imaginary residue " +
                                   std::to_string(z.imag()) +
                                   " exceeds the hermiticity bound");
  return z.real();
}

PositivityVerdict is_completely_positive(const LinearMap &t,
                                         const Tolerance &tol) {
  require_hermiticity_preserving(t, tol);
  const HermitianEig eig = hermitian_eig(t.choi2(), tol);
  const Index last = eig.eigenvalues.size() - 1;
  const double min_eig = eig.eigenvalues(last);

  PositivityVerdict verdict;
  verdict.query_k = std::nullopt;
  if (min_eig >= -tol.abs_eps()) {
    verdict.status = PositivityStatus::positive;
    verdict.best_value = min_eig;
    return verdict;
  }
  const CVector v = eig.eigenvectors.col(last);
  const double value = quadratic_form(t, v);
  verdict.status = PositivityStatus::violated;
  verdict.certificate = make_certificate(t, v, value);
  verdict.best_value = value;
  return verdict;
}

PositivityVerdict is_k_positive(const LinearMap &t, Index k,
                                const Tolerance &tol,
                                const SearchBudget &budget) {
  if (k < 1)
    throw BadRank("is_k_positive: k must be >= 1");
  require_hermiticity_preserving(t, tol);

  const Index n = t.dim_in();
  const Index m = t.dim_out();
  const HermitianEig eig = hermitian_eig(t.choi2(), tol);
  const Index last = eig.eigenvalues.size() - 1;
  const double min_eig = eig.eigenvalues(last);

  // Exact path: a PSD Choi matrix certifies positivity for every k.
  if (min_eig >= -tol.abs_eps()) {
    PositivityVerdict verdict;
    verdict.query_k = k;
    verdict.status = PositivityStatus::positive;
    verdict.best_value = min_eig;
    return verdict;
  }

  // Exact path: at k >= min(n,m) the query collapses to complete positivity.
  if (k >= std::min(n, m)) {
    PositivityVerdict verdict = is_completely_positive(t, tol);
    verdict.query_k = k;
    return verdict;
  }

  // Heuristic search over Schmidt-rank-<=k unit vectors: random restarts
  // plus one start from the rank-truncated bottom eigenvector.
  Certificate cert =
      minimize_rank_constrained(t.choi2(), n, m, k, budget, budget.seed);
  const CVector warm = project_rank(eig.eigenvectors.col(last), n, m, k);
  const Certificate polished =
      polish(t.choi2(), warm, n, m, k, Tolerance(), budget);
  if (polished.value < cert.value)
    cert = polished;

  PositivityVerdict verdict;
  verdict.query_k = k;
  verdict.best_value = cert.value;
  if (cert.value < -tol.abs_eps()) {
    verdict.status = PositivityStatus::violated;
    verdict.certificate = make_certificate(t, cert.vector, cert.value);
  } else {
    verdict.status = PositivityStatus::inconclusive;
  }
  return verdict;
}

CrosscheckReport ancilla_crosscheck(const LinearMap &t, Index k, int trials,
                                    std::uint64_t rng_seed) {
  if (k < 1)
    throw BadRank("ancilla_crosscheck: k must be >= 1");
  if (k * t.dim_in() > kAncillaDimCap)
    throw DimensionTooLarge("ancilla_crosscheck: k * dim_in = " +
                            std::to_string(k * t.dim_in()) + " exceeds " +
                            std::to_string(kAncillaDimCap));
  if (trials < 1)
    throw EmptyInput("ancilla_crosscheck: trials must be >= 1");
  require_hermiticity_preserving(t, verdict_tolerance());

  const LinearMap tk = ancilla_extend(t, k);
  const Index d = k * t.dim_in();
  Rng rng(rng_seed);

  CrosscheckReport report;
  report.trials = trials;
  for (int i = 0; i < trials; ++i) {
    CVector w(d);
    for (Index j = 0; j < d; ++j)
      w(j) = rng.complex_normal();
    w /= w.norm();
    const CMatrix out = tk.apply(w * w.adjoint());
    const HermitianEig eig = hermitian_eig(out, Tolerance(1e-8, 1e-8));
    const double min_eig = eig.eigenvalues(eig.eigenvalues.size() - 1);
    if (i == 0 || min_eig < report.min_eigenvalue)
      report.min_eigenvalue = min_eig;
  }
  return report;
}

double certificate_crosscheck(const LinearMap &t, Index k, const CVector &v) {
  const Index n = t.dim_in();
  if (k < 1)
    throw BadRank("certificate_crosscheck: k must be >= 1");
  if (k * n > kAncillaDimCap)
    throw DimensionTooLarge("certificate_crosscheck: k * dim_in = " +
                            std::to_string(k * n) + " exceeds " +
                            std::to_string(kAncillaDimCap));
  require_hermiticity_preserving(t, verdict_tolerance());

  const SchmidtForm form = schmidt_decompose(v, n, t.dim_out());
  if (form.s > k)
    throw BadRank("certificate_crosscheck: certificate has Schmidt rank " +
                  std::to_string(form.s) + " above k = " + std::to_string(k));

  // Rebuild the rank-1 input of the ancilla-extension argument: with
  // v = sum_p lambda_p a_p (x) b_p, the input vector on C^k (x) C^n is
  // X = sum_p f_p (x) conj(lambda_p a_p).
  CVector x = CVector::Zero(k * n);
  for (Index p = 0; p < form.s; ++p)
    for (Index i = 0; i < n; ++i)
      x(p * n + i) = form.coefficients(p) * std::conj(form.left_system(i, p));
  x /= x.norm();

  const LinearMap tk = ancilla_extend(t, k);
  const CMatrix out = tk.apply(x * x.adjoint());
  const HermitianEig eig = hermitian_eig(out, Tolerance(1e-8, 1e-8));
  return eig.eigenvalues(eig.eigenvalues.size() - 1);
}

} // namespace kpmap
