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

#ifndef KPMAP_RNG_HPP
#define KPMAP_RNG_HPP

#include <cstdint>
#include <random>

#include "kpmap/numerics.hpp"

namespace kpmap {

// Seeded random source. Gaussian variates are produced by an explicit
// Box-Muller transform on raw mt19937_64 output, so a fixed seed gives the
// same stream on every platform (std::normal_distribution does not).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0,1) with 53 random bits.
  double uniform();

  // Standard normal.
  double normal();

  // Complex standard normal: real and imaginary parts N(0, 1/2).
  Complex complex_normal();

private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

// Stream seed derivation for parallel-safe restarts: a splitmix64 step of
// master advanced by the stream index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// Matrix with independent complex standard normal entries.
CMatrix random_gaussian(Index rows, Index cols, Rng &rng);

// Haar-ish random matrix with orthonormal columns (QR of a Gaussian),
// cols <= rows.
CMatrix random_isometry(Index rows, Index cols, Rng &rng);

// Random n x n unitary.
CMatrix random_unitary(Index n, Rng &rng);

// Random n x n real orthogonal matrix (as a complex matrix).
CMatrix random_orthogonal(Index n, Rng &rng);

// Random Hermitian matrix with O(1) entries.
CMatrix random_hermitian(Index d, Rng &rng);

// Random positive semidefinite matrix g^* g, normalized to unit max-abs.
CMatrix random_psd(Index d, Rng &rng);

} // namespace kpmap

#endif
