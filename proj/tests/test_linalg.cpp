// Copyright 2026 The qswitch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "qsw/gates.hpp"
#include "qsw/linalg.hpp"
#include "support/test_support.hpp"

using namespace qsw;
using qsw_test::make_rng;
using qsw_test::random_matrix;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_SUITE_BEGIN("linalg");

TEST_CASE("tensor product: identity case") {
  CHECK(approx_eq(tensor_product(Operator::identity(2), Operator::identity(2)),
                  Operator::identity(4), 0.0));
}

TEST_CASE("tensor product: X (x) Z expanded by hand") {
  const Operator t = tensor_product(gates::pauli_x(), gates::pauli_z());
  Operator expected = Operator::zero(4);
  std::vector<Complex> e(16, Complex{0.0, 0.0});
  e[0 * 4 + 2] = 1.0;
  e[1 * 4 + 3] = -1.0;
  e[2 * 4 + 0] = 1.0;
  e[3 * 4 + 1] = -1.0;
  expected = Operator(4, e);
  CHECK(approx_eq(t, expected, 0.0));
}

TEST_CASE("tensor product: mixed-product identity on random pairs") {
  auto rng = make_rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator x = random_matrix(2, rng);
    const Operator y = random_matrix(2, rng);
    const Operator u = random_matrix(2, rng);
    const Operator v = random_matrix(2, rng);
    CHECK(approx_eq(tensor_product(x, y) * tensor_product(u, v),
                    tensor_product(x * u, y * v), 1e-12));
  }
}

TEST_CASE("tensor product: associative exactly on integer matrices") {
  const Operator a = Operator::from_rows({{1.0, 2.0}, {3.0, 4.0}});
  const Operator b = Operator::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  const Operator c = Operator::from_rows({{2.0, 0.0}, {0.0, 3.0}});
  CHECK(approx_eq(tensor_product(tensor_product(a, b), c),
                  tensor_product(a, tensor_product(b, c)), 0.0));
}

TEST_CASE("tensor product: state overload follows the same layout") {
  const StateVector plus = normalized(
      StateVector({Complex{1.0, 0.0}, Complex{1.0, 0.0}}));
  const StateVector e1 = StateVector::basis(2, 1);
  const StateVector joint = tensor_product(plus, e1);
  REQUIRE(joint.dim() == 4);
  CHECK(std::abs(joint[1] - plus[0]) < 1e-15);
  CHECK(std::abs(joint[3] - plus[1]) < 1e-15);
  CHECK(std::abs(joint[0]) < 1e-15);
  CHECK(std::abs(joint[2]) < 1e-15);
}

TEST_CASE("dagger: worked values and involution") {
  CHECK(approx_eq(dagger(Operator::identity(2)), Operator::identity(2), 0.0));

  const Operator n = Operator::from_rows({{0.0, kI}, {0.0, 0.0}});
  const Operator expected = Operator::from_rows({{0.0, 0.0}, {-kI, 0.0}});
  CHECK(approx_eq(dagger(n), expected, 0.0));

  auto rng = make_rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Operator m = random_matrix(3, rng);
    CHECK(approx_eq(dagger(dagger(m)), m, 0.0));
  }
}

TEST_CASE("hs_inner: worked values") {
  CHECK(std::abs(hs_inner(gates::pauli_x(), gates::pauli_x()) -
                 Complex{2.0, 0.0}) < 1e-15);
  CHECK(std::abs(hs_inner(gates::pauli_x(), gates::pauli_z())) < 1e-15);
  CHECK(std::abs(hs_inner(gates::identity(), gates::hadamard())) < 1e-15);
}

TEST_CASE("hs_inner: inner-product laws on random matrices") {
  auto rng = make_rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Operator x = random_matrix(3, rng);
    const Operator y = random_matrix(3, rng);
    const Complex self = hs_inner(x, x);
    CHECK(std::abs(self.imag()) < 1e-12);
    CHECK(self.real() >= 0.0);
    const double fn = frobenius_norm(x);
    CHECK(std::abs(self.real() - fn * fn) < 1e-10);
    CHECK(std::abs(hs_inner(x, y) - std::conj(hs_inner(y, x))) < 1e-12);
  }
}

TEST_CASE("hs_inner: dimension mismatch is rejected") {
  CHECK_THROWS_AS(hs_inner(Operator::identity(2), Operator::identity(4)),
                  DimensionMismatch);
}

TEST_CASE("unitarity defect: worked values") {
  CHECK(unitarity_defect(gates::pauli_x()) < 1e-15);

  const Operator twice = Complex{2.0, 0.0} * Operator::identity(2);
  CHECK(std::abs(unitarity_defect(twice) - 3.0 * std::sqrt(2.0)) < 1e-12);

  const Operator h_sum =
      Complex{1.0 / std::sqrt(2.0), 0.0} * (gates::pauli_x() + gates::pauli_z());
  CHECK(unitarity_defect(h_sum) < 1e-15);
  CHECK(approx_eq(h_sum, gates::hadamard(), 1e-12));
}

TEST_CASE("named gate library: unitary and textbook entries") {
  for (const auto& name : gates::fixed_names()) {
    const auto gate = gates::resolve(name);
    REQUIRE(gate.has_value());
    CHECK(unitarity_defect(*gate) < 1e-10);
  }
  for (double theta : {0.0, 0.3, 1.5707963267948966, -1.2}) {
    CHECK(unitarity_defect(gates::rx(theta)) < 1e-10);
    CHECK(unitarity_defect(gates::ry(theta)) < 1e-10);
    CHECK(unitarity_defect(gates::rz(theta)) < 1e-10);
  }

  CHECK(std::abs(gates::phase_s()(1, 1) - kI) < 1e-15);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(gates::phase_t()(1, 1) - Complex{s, s}) < 1e-15);
  CHECK(std::abs(gates::hadamard()(1, 1) + s) < 1e-15);
  CHECK(std::abs(gates::pauli_y()(0, 1) + kI) < 1e-15);
  // RX(pi) = -iX up to the global phase.
  CHECK(approx_eq_up_to_phase(gates::rx(3.141592653589793), gates::pauli_x(),
                              1e-12));
}

TEST_CASE("named gate library: algebraic identities") {
  CHECK(approx_eq(gates::phase_s() * gates::phase_s(), gates::pauli_z(),
                  1e-12));
  CHECK(approx_eq(gates::phase_t() * gates::phase_t(), gates::phase_s(),
                  1e-12));
  CHECK(approx_eq(gates::hadamard() * gates::hadamard(),
                  Operator::identity(2), 1e-12));
  // HXH = Z and HZH = X.
  CHECK(approx_eq(gates::hadamard() * gates::pauli_x() * gates::hadamard(),
                  gates::pauli_z(), 1e-12));
  CHECK(approx_eq(gates::hadamard() * gates::pauli_z() * gates::hadamard(),
                  gates::pauli_x(), 1e-12));
  // Y = iXZ.
  CHECK(approx_eq(gates::pauli_y(),
                  kI * (gates::pauli_x() * gates::pauli_z()), 1e-12));
  const double pi = 3.141592653589793;
  CHECK(approx_eq_up_to_phase(gates::ry(pi), gates::pauli_y(), 1e-12));
  CHECK(approx_eq_up_to_phase(gates::rz(pi), gates::pauli_z(), 1e-12));
  // Rotations compose additively around a fixed axis.
  CHECK(approx_eq(gates::rx(0.3) * gates::rx(0.4), gates::rx(0.7), 1e-12));
}

TEST_CASE("approx_eq: plain and modulo global phase") {
  const Operator x = gates::pauli_x();
  CHECK(approx_eq(x, x, 1e-12));
  CHECK(approx_eq(gates::hadamard(),
                  Complex{1.0 / std::sqrt(2.0), 0.0} *
                      (gates::pauli_x() + gates::pauli_z()),
                  1e-12));
  const Operator minus_x = Complex{-1.0, 0.0} * x;
  CHECK_FALSE(approx_eq(x, minus_x, 1e-12));
  CHECK(approx_eq_up_to_phase(x, minus_x, 1e-12));

  const Operator ix = kI * x;
  CHECK(approx_eq_up_to_phase(x, ix, 1e-12));
}

TEST_CASE("non-finite values are rejected at construction") {
  const double nan = std::nan("");
  CHECK_THROWS_AS(Operator(2, {Complex{nan, 0.0}, {}, {}, {}}), InvalidValue);
  CHECK_THROWS_AS(StateVector({Complex{0.0, INFINITY}}), InvalidValue);
  CHECK_THROWS_AS(Operator(2, {Complex{1.0, 0.0}}), InvalidValue);
  CHECK_THROWS_AS(StateVector(std::vector<Complex>{}), InvalidValue);
}

TEST_CASE("state helpers: norm, normalize, inner") {
  const StateVector v({Complex{3.0, 0.0}, Complex{0.0, 4.0}});
  CHECK(std::abs(norm(v) - 5.0) < 1e-15);
  const StateVector n = normalized(v);
  CHECK(std::abs(norm(n) - 1.0) < 1e-15);
  CHECK(std::abs(inner(n, n) - Complex{1.0, 0.0}) < 1e-15);
  CHECK_THROWS_AS(normalized(StateVector({Complex{0.0, 0.0}})), InvalidValue);
}

TEST_SUITE_END();
