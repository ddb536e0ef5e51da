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

#include "kpmap/maps.hpp"

#include <cmath>
#include <string>

namespace kpmap {

namespace {

// Unnormalized maximally entangled vector sum_i e_i (x) e_i in C^{n*n}.
CVector omega(Index n) {
  CVector w = CVector::Zero(n * n);
  for (Index i = 0; i < n; ++i)
    w(i * n + i) = 1.0;
  return w;
}

// Choi matrix of a -> a^t: the swap operator sum_ij E_ij (x) E_ji.
CMatrix swap_operator(Index n) {
  CMatrix s = CMatrix::Zero(n * n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      s(i * n + j, j * n + i) = 1.0;
  return s;
}

// Column vector w with w(i*m + p) = K(p, i); then the Choi matrix of the
// Kraus map is sum_s w_s w_s^*.
CVector kraus_column(const CMatrix &k) {
  const Index m = k.rows();
  const Index n = k.cols();
  CVector w(n * m);
  for (Index i = 0; i < n; ++i)
    for (Index p = 0; p < m; ++p)
      w(i * m + p) = k(p, i);
  return w;
}

LinearMap from_kraus(Index n, Index m, const std::vector<CMatrix> &operators) {
  if (operators.empty())
    throw MalformedSpec("kraus spec: operator list is empty");
  CMatrix choi = CMatrix::Zero(n * m, n * m);
  for (const CMatrix &k : operators) {
    if (k.rows() != m || k.cols() != n)
      throw DimensionMismatch("kraus spec: operator is " +
                              std::to_string(k.rows()) + "x" +
                              std::to_string(k.cols()) + ", expected " +
                              std::to_string(m) + "x" + std::to_string(n));
    const CVector w = kraus_column(k);
    choi += w * w.adjoint();
  }
  return LinearMap(n, m, std::move(choi));
}

LinearMap from_zoo(const std::string &name, Index n,
                   const std::vector<double> &params) {
  if (n < 1)
    throw MalformedSpec("zoo spec: dimension must be >= 1");
  const Index d = n * n;
  if (name == "identity") {
    if (!params.empty())
      throw MalformedSpec("zoo identity takes no parameters");
    const CVector w = omega(n);
    return LinearMap(n, n, w * w.adjoint());
  }
  if (name == "transposition") {
    if (!params.empty())
      throw MalformedSpec("zoo transposition takes no parameters");
    return LinearMap(n, n, swap_operator(n));
  }
  if (name == "reduction") {
    if (!params.empty())
      throw MalformedSpec("zoo reduction takes no parameters");
    const CVector w = omega(n);
    return LinearMap(n, n, CMatrix::Identity(d, d) - w * w.adjoint());
  }
  if (name == "depolarizing") {
    if (params.size() != 1)
      throw MalformedSpec("zoo depolarizing takes exactly one parameter p");
    const double p = params[0];
    if (p < 0.0 || p > 1.0)
      throw MalformedSpec("zoo depolarizing: p must lie in [0,1]");
    const CVector w = omega(n);
    CMatrix choi = (1.0 - p) * (w * w.adjoint());
    choi += (p / static_cast<double>(n)) * CMatrix::Identity(d, d);
    return LinearMap(n, n, std::move(choi));
  }
  throw UnknownZooName("unknown zoo map \"" + name + "\"");
}

} // namespace

LinearMap::LinearMap(Index dim_in, Index dim_out, CMatrix choi2)
    : n_(dim_in), m_(dim_out), choi2_(std::move(choi2)) {
  if (n_ < 1 || m_ < 1)
    throw DimensionMismatch("LinearMap: dimensions must be >= 1");
  if (choi2_.rows() != n_ * m_ || choi2_.cols() != n_ * m_)
    throw DimensionMismatch("LinearMap: Choi matrix is " +
                            std::to_string(choi2_.rows()) + "x" +
                            std::to_string(choi2_.cols()) + ", expected " +
                            std::to_string(n_ * m_) + " square");
}

CMatrix LinearMap::apply(const CMatrix &a) const {
  if (a.rows() != n_ || a.cols() != n_)
    throw DimensionMismatch("apply: operand is " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + ", expected " +
                            std::to_string(n_) + " square");
  CMatrix out = CMatrix::Zero(m_, m_);
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j) {
      const Complex c = a(i, j);
      if (c != Complex(0.0, 0.0))
        out += c * choi2_.block(i * m_, j * m_, m_, m_);
    }
  return out;
}

LinearMap from_spec(const MapSpec &spec) {
  if (spec.kind == MapSpecKind::zoo) {
    return from_zoo(spec.zoo_name, spec.n, spec.params);
  }
  if (spec.n < 1 || spec.m < 1)
    throw MalformedSpec("map spec: dimensions must be >= 1");
  if (spec.kind == MapSpecKind::kraus)
    return from_kraus(spec.n, spec.m, spec.kraus);
  if (spec.choi2.rows() != spec.n * spec.m ||
      spec.choi2.cols() != spec.n * spec.m)
    throw MalformedSpec("map spec: choi2 block has wrong shape");
  return LinearMap(spec.n, spec.m, spec.choi2);
}

KrausSet to_kraus(const LinearMap &t, const Tolerance &tol) {
  const Index n = t.dim_in();
  const Index m = t.dim_out();
  const HermitianEig eig = hermitian_eig(t.choi2(), tol);

  const double floor = -tol.abs_eps();
  const double min_eig = eig.eigenvalues(eig.eigenvalues.size() - 1);
  if (min_eig < floor)
    throw NotCompletelyPositive("to_kraus: Choi matrix has eigenvalue " +
                                    std::to_string(min_eig),
                                min_eig);

  KrausSet out;
  for (Index s = 0; s < eig.eigenvalues.size(); ++s) {
    const double lambda = eig.eigenvalues(s);
    if (lambda <= tol.abs_eps())
      continue; // clipped to zero
    const CVector w = std::sqrt(lambda) * eig.eigenvectors.col(s);
    CMatrix k(m, n);
    for (Index i = 0; i < n; ++i)
      for (Index p = 0; p < m; ++p)
        k(p, i) = w(i * m + p);
    out.operators.push_back(std::move(k));
  }
  if (out.operators.empty()) // zero map: keep the set nonempty
    out.operators.push_back(CMatrix::Zero(m, n));
  return out;
}

LinearMap ancilla_extend(const LinearMap &t, Index k) {
  if (k < 1)
    throw DimensionMismatch("ancilla_extend: k must be >= 1");
  const Index n = t.dim_in();
  const Index m = t.dim_out();
  const CMatrix &base = t.choi2();
  const Index km = k * m;
  CMatrix choi = CMatrix::Zero(k * n * km, k * n * km);
  // Block ((a,i),(b,j)) of the extended Choi matrix is E_ab (x) T(E_ij).
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          choi.block((a * n + i) * km + a * m, (b * n + j) * km + b * m, m, m) =
              base.block(i * m, j * m, m, m);
  return LinearMap(k * n, k * m, std::move(choi));
}

MapSpec zoo(const std::string &name, Index n, const std::vector<double> &params) {
  bool known = false;
  for (const ZooEntry &e : zoo_catalog())
    known = known || e.name == name;
  if (!known)
    throw UnknownZooName("unknown zoo map \"" + name + "\"");
  MapSpec spec;
  spec.kind = MapSpecKind::zoo;
  spec.n = n;
  spec.m = n;
  spec.zoo_name = name;
  spec.params = params;
  from_zoo(name, n, params); // validate eagerly
  return spec;
}

const std::vector<ZooEntry> &zoo_catalog() {
  static const std::vector<ZooEntry> entries = {
      {"identity", "a -> a; completely positive, Choi matrix of rank one"},
      {"transposition",
       "a -> a^t; positive but not 2-positive, the partial-transpose "
       "entanglement test of Peres (1996)"},
      {"reduction",
       "a -> Tr(a) I - a; the reduction separability criterion map of "
       "Horodecki (1999) and Cerf et al. (1999)"},
      {"depolarizing",
       "a -> (1-p) a + p Tr(a) I/n; interpolates identity to complete "
       "depolarization, completely positive for p in [0,1]"},
  };
  return entries;
}

} // namespace kpmap
