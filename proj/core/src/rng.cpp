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

#include "kpmap/rng.hpp"

#include <cmath>
#include <numbers>

namespace kpmap {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller; u1 bounded away from zero so the log stays finite.
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 finalizer on (master + stream * golden gamma)
  std::uint64_t z = master + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CMatrix random_gaussian(Index rows, Index cols, Rng &rng) {
  CMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      out(i, j) = rng.complex_normal();
  return out;
}

CMatrix random_isometry(Index rows, Index cols, Rng &rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_gaussian(rows, cols, rng));
  return CMatrix(qr.householderQ()) * CMatrix::Identity(rows, cols);
}

CMatrix random_unitary(Index n, Rng &rng) { return random_isometry(n, n, rng); }

CMatrix random_orthogonal(Index n, Rng &rng) {
  Eigen::MatrixXd g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = Eigen::MatrixXd(qr.householderQ());
  return q.cast<Complex>();
}

CMatrix random_hermitian(Index d, Rng &rng) {
  const CMatrix g = random_gaussian(d, d, rng);
  return (g + g.adjoint()) / 2.0;
}

CMatrix random_psd(Index d, Rng &rng) {
  const CMatrix g = random_gaussian(d, d, rng);
  CMatrix p = g.adjoint() * g;
  return p / max_abs(p);
}

} // namespace kpmap
