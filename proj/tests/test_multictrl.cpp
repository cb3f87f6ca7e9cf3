/**
 * This code is part of qcu.
 *
 * (C) Copyright qcu contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#include <doctest.h>

#include <cmath>

#include "qcu/angles.hpp"
#include "qcu/errors.hpp"
#include "qcu/multictrl.hpp"
#include "qcu/synth.hpp"
#include "test_support.hpp"

using namespace qcu;
using namespace qcu::multictrl;
using test_support::rng;
using test_support::uniform;

namespace {

cplx expi(double x) { return {std::cos(x), std::sin(x)}; }

std::size_t swap_count(const QuditCircuit& c) {
  std::size_t n = 0;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::ControlledLevelSwap) ++n;
  }
  return n;
}

std::size_t phase_count(const QuditCircuit& c) {
  std::size_t n = 0;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::ControlledLevelPhase) ++n;
  }
  return n;
}

} // namespace

TEST_CASE("build_ncu rejects zero controls") {
  CHECK_THROWS_AS(build_ncu(0, 1.0), ValidationError);
}

TEST_CASE("build_ncu gate counts and target dimension") {
  {
    const auto c = build_ncu(1, 0.7);
    CHECK(c.target_levels == 2);
    CHECK(c.gates.size() == 1);
    CHECK(phase_count(c) == 1);
  }
  {
    const auto c = build_ncu(2, 0.7);
    CHECK(c.target_levels == 3);
    CHECK(c.gates.size() == 3);
    CHECK(swap_count(c) == 2);
    CHECK(phase_count(c) == 1);
  }
  {
    const auto c = build_ncu(3, 0.7);
    CHECK(c.target_levels == 4);
    CHECK(c.gates.size() == 5);
    CHECK(swap_count(c) == 4);
    CHECK(phase_count(c) == 1);
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = build_ncu(n, 0.3);
    CHECK(c.gates.size() == 2 * n - 1);
    CHECK(swap_count(c) == 2 * (n - 1));
    CHECK(phase_count(c) == 1);
  }
}

TEST_CASE("a local basis change adds the conjugating pair") {
  const auto v = test_support::random_unitary2(rng());
  const auto c = build_ncu(2, 0.7, v);
  CHECK(c.gates.size() == 5);
  CHECK(c.gates.front().kind == GateKind::LocalUnitary);
  CHECK(c.gates.back().kind == GateKind::LocalUnitary);
}

TEST_CASE("simulate_circuit of an empty circuit is the identity") {
  QuditCircuit c;
  c.n_controls = 2;
  c.target_levels = 3;
  CHECK(max_abs_diff(simulate_circuit(c), ComplexMatrix::identity(12)) == 0.0);
}

TEST_CASE("single controlled phase acts as the two-qubit c-phase") {
  const double theta = 1.1;
  const auto c = build_ncu(1, theta);
  const auto u = simulate_circuit(c);
  const auto expected = ComplexMatrix::diagonal({1.0, 1.0, 1.0, expi(theta)});
  CHECK(max_abs_diff(u, expected) < 1e-15);
}

TEST_CASE("doubly controlled phase restricts to the direct construction") {
  const double theta = 0.9;
  const auto c = build_ncu(2, theta);
  const auto u = simulate_circuit(c);
  REQUIRE(u.rows() == 12);

  // Direct 8-dimensional construction: phase on |11>|1> only.
  ComplexMatrix expected = ComplexMatrix::identity(8);
  expected(7, 7) = expi(theta);

  for (std::size_t ci = 0; ci < 4; ++ci) {
    for (std::size_t li = 0; li < 2; ++li) {
      for (std::size_t cj = 0; cj < 4; ++cj) {
        for (std::size_t lj = 0; lj < 2; ++lj) {
          const cplx got = u(ci * 3 + li, cj * 3 + lj);
          const cplx want = expected(ci * 2 + li, cj * 2 + lj);
          CHECK(std::abs(got - want) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("simulated circuits are unitary") {
  auto& g = rng();
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto v = test_support::random_unitary2(g);
    const auto c = build_ncu(n, uniform(g, 0.0, kTwoPi), v);
    CHECK(is_unitary(simulate_circuit(c), 1e-10));
  }
}

TEST_CASE("verify_ncu against the ideal controlled gates") {
  {
    // Toffoli-phase: theta = pi on two controls.
    const auto c = build_ncu(2, kPi);
    const auto rep = verify_ncu(c, 2, kPi);
    CHECK(rep.deviation < 1e-10);
    CHECK(rep.leakage < 1e-12);
  }
  {
    const auto c = build_ncu(3, 3 * kPi / 4);
    const auto rep = verify_ncu(c, 3, 3 * kPi / 4);
    CHECK(rep.deviation < 1e-10);
    CHECK(rep.leakage < 1e-12);
  }
  {
    const auto c = build_ncu(1, 0.123);
    const auto rep = verify_ncu(c, 1, 0.123);
    CHECK(rep.deviation < 1e-12);
    CHECK(rep.leakage < 1e-12);
  }
}

TEST_CASE("verify_ncu with random conjugating unitaries") {
  auto& g = rng();
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const double theta = uniform(g, 0.0, kTwoPi);
      const auto v = test_support::random_unitary2(g);
      const auto c = build_ncu(n, theta, v);
      const auto report = verify_ncu(c, n, theta, v);
      CHECK(report.deviation < 1e-10);
      CHECK(report.leakage < 1e-12);
    }
  }
}

TEST_CASE("simulate_circuit enforces the dimension cap") {
  CHECK_THROWS_AS(simulate_circuit(build_ncu(11, 0.5)), ValidationError);
}

TEST_CASE("resource_report reproduces the cascade comparisons") {
  {
    const auto r = resource_report(2, kPi / 2, 1.0 / 9.0, 0.090);
    CHECK(r.two_qubit_gate_count == 3);
    CHECK(r.cnot_equivalent_count == 2);
    CHECK(r.cphase_count == 1);
    CHECK(r.success_probability_ours ==
          doctest::Approx((1.0 / 81.0) * 0.090).epsilon(1e-12));
    CHECK(r.success_probability_baseline ==
          doctest::Approx(std::pow(1.0 / 9.0, 4)).epsilon(1e-12));
    CHECK(r.success_probability_ours / r.success_probability_baseline ==
          doctest::Approx(7.29).epsilon(0.01));
  }
  {
    const auto r = resource_report(1, kPi, 1.0 / 9.0, 0.111);
    CHECK(r.two_qubit_gate_count == 1);
    CHECK(r.cnot_equivalent_count == 0);
    CHECK(r.success_probability_ours / r.success_probability_baseline ==
          doctest::Approx(8.99).epsilon(0.01));
  }
  {
    const auto r = resource_report(2, 0.0, 1.0, 1.0);
    CHECK(r.success_probability_ours == 1.0);
    CHECK(r.success_probability_baseline == 1.0);
  }
}

TEST_CASE("resource advantage is independent of the control count") {
  const double p_cnot = 1.0 / 9.0;
  const double p_cphase = 0.088;
  const double expected = p_cphase / (p_cnot * p_cnot);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto r = resource_report(n, kPi, p_cnot, p_cphase);
    CHECK(r.success_probability_ours / r.success_probability_baseline ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("resource_report validates probabilities") {
  CHECK_THROWS_AS(resource_report(2, kPi, 0.0, 0.5), ValidationError);
  CHECK_THROWS_AS(resource_report(2, kPi, 0.5, 1.5), ValidationError);
  CHECK_THROWS_AS(resource_report(0, kPi, 0.5, 0.5), ValidationError);
}
