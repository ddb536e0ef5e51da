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

#ifndef KPMAP_MAPS_HPP
#define KPMAP_MAPS_HPP

#include <string>
#include <vector>

#include "kpmap/numerics.hpp"

namespace kpmap {

//=========================================================================
// Linear maps between matrix algebras
//=========================================================================

// A linear map T from n x n to m x m complex matrices, stored canonically
// as its Choi matrix C: the (n*m) x (n*m) matrix whose m x m block (i,j)
// is T(E_ij), E_ij the matrix unit with a single one at row i, column j.
class LinearMap {
public:
  LinearMap(Index dim_in, Index dim_out, CMatrix choi2);

  Index dim_in() const { return n_; }
  Index dim_out() const { return m_; }
  const CMatrix &choi2() const { return choi2_; }

  // Evaluate T(a) by expanding a in the matrix-unit basis against the
  // Choi blocks.
  CMatrix apply(const CMatrix &a) const;

private:
  Index n_;
  Index m_;
  CMatrix choi2_;
};

// Operator-sum representation: a nonempty list of m x n operators.
struct KrausSet {
  std::vector<CMatrix> operators;
};

// Serialized description of a map.
enum class MapSpecKind { choi2_explicit, kraus, zoo };

struct MapSpec {
  MapSpecKind kind = MapSpecKind::zoo;
  Index n = 0;
  Index m = 0;
  CMatrix choi2;              // kind == choi2_explicit
  std::vector<CMatrix> kraus; // kind == kraus
  std::string zoo_name;       // kind == zoo
  std::vector<double> params; // kind == zoo
};

//=========================================================================
// Operations
//=========================================================================

// Build the canonical LinearMap from a spec. Kraus input K yields the map
// a -> sum_s K_s a K_s^*.
LinearMap from_spec(const MapSpec &spec);

// Kraus operators from the eigendecomposition of a PSD Choi matrix.
// Eigenvalues in [-tol.abs_eps, tol.abs_eps] are treated as zero; an
// eigenvalue below -tol.abs_eps raises NotCompletelyPositive.
KrausSet to_kraus(const LinearMap &t, const Tolerance &tol = Tolerance());

// The ancilla extension: the map 1_k (x) T acting blockwise on k x k block
// matrices with n x n entries. Composite indices are row-major, so
// extending by j then by k coincides entrywise with extending by j*k.
LinearMap ancilla_extend(const LinearMap &t, Index k);

// Named standard maps: identity, transposition, reduction
// (a -> Tr(a) I - a), depolarizing (one parameter p in [0,1],
// a -> (1-p) a + p Tr(a) I / n).
MapSpec zoo(const std::string &name, Index n,
            const std::vector<double> &params = {});

// Names accepted by zoo(), with one-line descriptions for listings.
struct ZooEntry {
  std::string name;
  std::string description;
};
const std::vector<ZooEntry> &zoo_catalog();

} // namespace kpmap

#endif
