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

#include "kpmap/schmidt.hpp"

#include <string>

#include "kpmap/rng.hpp"

namespace kpmap {

namespace {

Index count_above_threshold(const RVector &sigma, const Tolerance &tol) {
  if (sigma.size() == 0)
    return 0;
  const double cutoff = tol.abs_eps() + tol.rel_eps() * sigma(0);
  Index s = 0;
  while (s < sigma.size() && sigma(s) > cutoff)
    ++s;
  return s;
}

} // namespace

CVector SchmidtForm::reconstruct() const {
  const Index n = left_system.rows();
  const Index m = right_system.rows();
  CVector v = CVector::Zero(n * m);
  for (Index p = 0; p < s; ++p)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < m; ++j)
        v(i * m + j) += coefficients(p) * left_system(i, p) * right_system(j, p);
  return v;
}

SchmidtForm schmidt_decompose(const CVector &v, Index n, Index m,
                              const Tolerance &tol) {
  if (v.size() != n * m)
    throw DimensionMismatch("schmidt_decompose: vector of dim " +
                            std::to_string(v.size()) + " is not " +
                            std::to_string(n) + "*" + std::to_string(m));
  if (v.norm() <= tol.abs_eps())
    throw ZeroVector("schmidt_decompose: vector is zero to tolerance");

  const Svd dec = svd(reshape_to_matrix(v, n, m));
  const Index s = count_above_threshold(dec.singular_values, tol);
  if (s == 0)
    throw ZeroVector("schmidt_decompose: all Schmidt coefficients below "
                     "rank threshold");

  SchmidtForm form;
  form.s = s;
  form.coefficients = dec.singular_values.head(s);
  form.left_system = dec.u.leftCols(s);
  // reshape(x (x) y) = x y^t, so the right system is the conjugate of the
  // right singular vectors.
  form.right_system = dec.v.leftCols(s).conjugate();
  return form;
}

Index schmidt_rank(const CVector &v, Index n, Index m, const Tolerance &tol) {
  if (v.size() != n * m)
    throw DimensionMismatch("schmidt_rank: vector of dim " +
                            std::to_string(v.size()) + " is not " +
                            std::to_string(n) + "*" + std::to_string(m));
  if (v.norm() <= tol.abs_eps())
    throw ZeroVector("schmidt_rank: vector is zero to tolerance");
  const Svd dec = svd(reshape_to_matrix(v, n, m));
  return count_above_threshold(dec.singular_values, tol);
}

CVector build_from_systems(const std::vector<CVector> &xs,
                           const std::vector<CVector> &ys) {
  if (xs.empty() || ys.empty())
    throw EmptyInput("build_from_systems: empty vector system");
  if (xs.size() != ys.size())
    throw DimensionMismatch("build_from_systems: systems have sizes " +
                            std::to_string(xs.size()) + " and " +
                            std::to_string(ys.size()));
  const Index n = xs[0].size();
  const Index m = ys[0].size();
  CVector v = CVector::Zero(n * m);
  for (std::size_t p = 0; p < xs.size(); ++p) {
    if (xs[p].size() != n || ys[p].size() != m)
      throw DimensionMismatch("build_from_systems: inconsistent dimensions "
                              "within a system");
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < m; ++j)
        v(i * m + j) += xs[p](i) * ys[p](j);
  }
  return v;
}

CVector sample_rank_k(Index n, Index m, Index k, std::uint64_t rng_seed) {
  if (k < 1 || k > std::min(n, m))
    throw BadRank("sample_rank_k: k = " + std::to_string(k) +
                  " outside 1..min(" + std::to_string(n) + "," +
                  std::to_string(m) + ")");
  Rng rng(rng_seed);
  const CMatrix q1 = random_isometry(n, k, rng);
  const CMatrix q2 = random_isometry(m, k, rng);
  CVector g(k);
  for (Index p = 0; p < k; ++p)
    g(p) = rng.complex_normal();
  const CMatrix a = q1 * g.asDiagonal() * q2.adjoint();
  CVector v = reshape_to_vector(a);
  v /= v.norm();
  return v;
}

} // namespace kpmap
