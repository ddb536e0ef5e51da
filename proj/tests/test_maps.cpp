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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kpmap/maps.hpp"
#include "kpmap/rng.hpp"
#include "test_support.hpp"

using namespace kpmap;
using namespace kpmap::testing;

namespace {

LinearMap zoo_map(const std::string &name, Index n,
                  const std::vector<double> &params = {}) {
  return from_spec(zoo(name, n, params));
}

} // namespace

TEST_CASE("apply: identity, transposition, reduction closed forms") {
  Rng rng(11);
  const LinearMap id = zoo_map("identity", 3);
  const CMatrix a = random_gaussian(3, 3, rng);
  CHECK(max_abs(id.apply(a) - a) <= 1e-14);

  const LinearMap tr = zoo_map("transposition", 2);
  CMatrix b(2, 2);
  b << Complex(1, 2), Complex(3, -1), Complex(0, 5), Complex(-2, 0);
  CHECK(max_abs(tr.apply(b) - b.transpose()) == 0.0);

  // Tr(I) I - I = I for n = 2.
  const LinearMap red = zoo_map("reduction", 2);
  CHECK(max_abs(red.apply(CMatrix::Identity(2, 2)) - CMatrix::Identity(2, 2)) <=
        1e-14);

  CHECK_THROWS_AS(tr.apply(CMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("from_spec: zoo identity has the rank-one Choi matrix") {
  const LinearMap id = zoo_map("identity", 2);
  const CVector w = omega(2);
  CHECK(max_abs(id.choi2() - w * w.adjoint()) == 0.0);
  CHECK(std::abs(id.choi2().trace() - Complex(2.0, 0.0)) == 0.0);

  MapSpec kraus_id;
  kraus_id.kind = MapSpecKind::kraus;
  kraus_id.n = 2;
  kraus_id.m = 2;
  kraus_id.kraus.push_back(CMatrix::Identity(2, 2));
  CHECK(max_abs(from_spec(kraus_id).choi2() - id.choi2()) == 0.0);
}

TEST_CASE("from_spec: zoo transposition is the swap operator") {
  const LinearMap tr = zoo_map("transposition", 2);
  CHECK(max_abs(tr.choi2() - swap_matrix(2)) == 0.0);
}

TEST_CASE("from_spec: malformed specs are rejected") {
  MapSpec bad;
  bad.kind = MapSpecKind::kraus;
  bad.n = 2;
  bad.m = 2;
  CHECK_THROWS_AS(from_spec(bad), MalformedSpec);

  bad.kraus.push_back(CMatrix::Identity(3, 3));
  CHECK_THROWS_AS(from_spec(bad), DimensionMismatch);

  MapSpec shape;
  shape.kind = MapSpecKind::choi2_explicit;
  shape.n = 2;
  shape.m = 2;
  shape.choi2 = CMatrix::Identity(3, 3);
  CHECK_THROWS_AS(from_spec(shape), MalformedSpec);
}

TEST_CASE("to_kraus: identity map yields one operator proportional to 1") {
  const KrausSet set = to_kraus(zoo_map("identity", 2));
  REQUIRE(set.operators.size() == 1);
  const CMatrix &k = set.operators[0];
  CHECK(max_abs(k - k(0, 0) * CMatrix::Identity(2, 2)) <= 1e-12);
  CHECK(std::abs(std::abs(k(0, 0)) - 1.0) <= 1e-12);
}

TEST_CASE("to_kraus: complete depolarizing splits into four operators") {
  const KrausSet set = to_kraus(zoo_map("depolarizing", 2, {1.0}));
  REQUIRE(set.operators.size() == 4);
  for (const CMatrix &k : set.operators)
    CHECK(k.squaredNorm() == doctest::Approx(0.5)); // each E_ij / sqrt(2)

  MapSpec back;
  back.kind = MapSpecKind::kraus;
  back.n = 2;
  back.m = 2;
  back.kraus = set.operators;
  CHECK(max_abs(from_spec(back).choi2() -
                zoo_map("depolarizing", 2, {1.0}).choi2()) <= 1e-12);
}

TEST_CASE("to_kraus: transposition is rejected with its eigenvalue") {
  try {
    to_kraus(zoo_map("transposition", 2));
    FAIL("expected NotCompletelyPositive");
  } catch (const NotCompletelyPositive &e) {
    CHECK(e.eigenvalue() == doctest::Approx(-1.0));
  }
}

TEST_CASE("to_kraus: roundtrip on random completely positive maps") {
  Rng rng(22);
  for (auto [n, m] : std::vector<std::pair<Index, Index>>{{2, 2}, {2, 3}, {3, 3}}) {
    for (int trial = 0; trial < 10; ++trial) {
      const LinearMap t = random_cp_map(n, m, rng);
      const KrausSet set = to_kraus(t);
      MapSpec back;
      back.kind = MapSpecKind::kraus;
      back.n = n;
      back.m = m;
      back.kraus = set.operators;
      CHECK(max_abs(from_spec(back).choi2() - t.choi2()) <= 1e-8);
    }
  }
}

TEST_CASE("to_kraus: zero map keeps the set nonempty") {
  const LinearMap zero(2, 2, CMatrix::Zero(4, 4));
  const KrausSet set = to_kraus(zero);
  REQUIRE(set.operators.size() == 1);
  CHECK(max_abs(set.operators[0]) == 0.0);
}

TEST_CASE("ancilla_extend: k = 1 is the identity on representations") {
  Rng rng(33);
  const LinearMap t = random_generic_map(2, 3, rng);
  CHECK(max_abs(ancilla_extend(t, 1).choi2() - t.choi2()) == 0.0);
}

TEST_CASE("ancilla_extend: identity extends to the larger identity") {
  const LinearMap id2 = zoo_map("identity", 2);
  const LinearMap id6 = zoo_map("identity", 6);
  CHECK(max_abs(ancilla_extend(id2, 3).choi2() - id6.choi2()) == 0.0);
}

TEST_CASE("ancilla_extend: partial transpose witness on the entangled "
          "projector") {
  const LinearMap t2 = ancilla_extend(zoo_map("transposition", 2), 2);
  const CVector w = omega(2);
  const CMatrix out = t2.apply(w * w.adjoint());
  CHECK(max_abs(out - swap_matrix(2)) <= 1e-14);
  const HermitianEig eig = hermitian_eig(out);
  CHECK(eig.eigenvalues(3) == doctest::Approx(-1.0));
}

TEST_CASE("ancilla_extend: nested extensions compose exactly") {
  Rng rng(44);
  const LinearMap t = random_generic_map(2, 3, rng);
  // Composite indices are row-major, so the block-permutation isomorphism
  // between C^k (x) C^j and C^{kj} is the identity on entries.
  const CMatrix nested = ancilla_extend(ancilla_extend(t, 3), 2).choi2();
  const CMatrix direct = ancilla_extend(t, 6).choi2();
  CHECK(max_abs(nested - direct) == 0.0);
}

TEST_CASE("zoo: reduction and depolarizing closed forms") {
  const LinearMap red = zoo_map("reduction", 3);
  CMatrix expected = CMatrix::Identity(3, 3);
  expected(0, 0) = 0.0;
  CHECK(max_abs(red.apply(unit(3, 0, 0)) - expected) == 0.0);

  Rng rng(55);
  CMatrix a = random_gaussian(2, 2, rng);
  a /= a.trace(); // unit trace
  const LinearMap dep = zoo_map("depolarizing", 2, {1.0});
  CHECK(max_abs(dep.apply(a) - 0.5 * CMatrix::Identity(2, 2)) <= 1e-12);
}

TEST_CASE("zoo: identity fixes random operators") {
  Rng rng(66);
  const LinearMap id = zoo_map("identity", 3);
  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix a = random_gaussian(3, 3, rng);
    CHECK(max_abs(id.apply(a) - a) <= 1e-13);
  }
}

TEST_CASE("zoo: validation") {
  CHECK_THROWS_AS(zoo("cabbage", 2), UnknownZooName);
  CHECK_THROWS_AS(zoo("depolarizing", 2, {1.5}), MalformedSpec);
  CHECK_THROWS_AS(zoo("depolarizing", 2), MalformedSpec);
  CHECK_THROWS_AS(zoo("identity", 2, {0.5}), MalformedSpec);
  CHECK(zoo_catalog().size() == 4);
}

TEST_CASE("property: apply is linear in the operand") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const LinearMap t = random_generic_map(3, 2, rng);
    const CMatrix a = random_gaussian(3, 3, rng);
    const CMatrix b = random_gaussian(3, 3, rng);
    const Complex alpha = rng.complex_normal();
    const Complex beta = rng.complex_normal();
    CHECK(max_abs(t.apply(alpha * a + beta * b) -
                  (alpha * t.apply(a) + beta * t.apply(b))) <= 1e-11);
  }
}
