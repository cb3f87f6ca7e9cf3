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
#include <sstream>

#include "qcu/angles.hpp"
#include "qcu/errors.hpp"
#include "qcu/synth.hpp"
#include "qcu/tomo.hpp"
#include "test_support.hpp"

using namespace qcu;
using namespace qcu::tomo;
using test_support::rng;
using test_support::uniform;

namespace {

double count_of(const Tomogram& t, const char* in, const char* meas) {
  for (std::size_t i = 0; i < t.configurations.size(); ++i) {
    if (t.configurations[i].first == in && t.configurations[i].second == meas) {
      return t.counts[i];
    }
  }
  FAIL("configuration not found");
  return 0.0;
}

ChoiMatrix depolarized_choi(const ComplexMatrix& u, double s) {
  ChoiMatrix pure = choi_of_unitary(u);
  ComplexMatrix m = cplx(1.0 - s, 0.0) * pure.matrix +
                    cplx(s / 2.0, 0.0) * ComplexMatrix::identity(4);
  return {std::move(m)};
}

} // namespace

TEST_CASE("choi_of_unitary of the identity is the unnormalized pair state") {
  const auto c = choi_of_unitary(ComplexMatrix::identity(2));
  CHECK(trace(c.matrix).real() == doctest::Approx(2.0));
  for (std::size_t i : {0, 3}) {
    for (std::size_t j : {0, 3}) {
      CHECK(std::abs(c.matrix(i, j) - cplx(1.0)) < 1e-15);
    }
  }
  CHECK(std::abs(c.matrix(1, 1)) < 1e-15);
  CHECK(std::abs(c.matrix(2, 2)) < 1e-15);
}

TEST_CASE("choi_of_unitary matches the direct outer product for Z(pi)") {
  const auto u = synth::rot_z(kPi); // diag(-i, i)
  const auto c = choi_of_unitary(u);
  const std::array<cplx, 4> v = {u(0, 0), u(1, 0), u(0, 1), u(1, 1)};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(std::abs(c.matrix(i, j) - v[i] * std::conj(v[j])) < 1e-15);
    }
  }
}

TEST_CASE("choi matrices of unitaries are pure, trace-2, rank-1") {
  auto& g = rng();
  for (int rep = 0; rep < 25; ++rep) {
    const auto u = test_support::random_unitary2(g);
    const auto c = choi_of_unitary(u);
    CHECK(purity(c) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(trace(c.matrix).real() == doctest::Approx(2.0).epsilon(1e-12));
    const auto eig = hermitian_eigensystem(c.matrix);
    CHECK(eig.eigenvalues[3] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(std::abs(eig.eigenvalues[2]) < 1e-10);
    CHECK(eig.eigenvalues[0] > -1e-10);
  }
}

TEST_CASE("choi_of_unitary validates input") {
  CHECK_THROWS_AS(choi_of_unitary(ComplexMatrix{{1.0, 0.0}, {0.0, 0.5}}),
                  ValidationError);
}

TEST_CASE("noiseless tomography counts are exact expectations") {
  const auto t = simulate_tomography(ComplexMatrix::identity(2), 1000,
                                     NoiseModel::none());
  REQUIRE(t.configurations.size() == 36);
  CHECK(count_of(t, "H", "H") == doctest::Approx(1000.0));
  CHECK(count_of(t, "H", "V") == doctest::Approx(0.0));
  CHECK(count_of(t, "H", "D") == doctest::Approx(500.0));

  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix h{{s, s}, {s, -s}};
  const auto th = simulate_tomography(h, 1000, NoiseModel::none());
  CHECK(count_of(th, "H", "D") == doctest::Approx(1000.0));
  CHECK(count_of(th, "H", "A") == doctest::Approx(0.0));
}

TEST_CASE("tomograms are deterministic given a seed and bounded") {
  const auto u = test_support::random_unitary2(rng());
  const auto a = simulate_tomography(u, 2000, NoiseModel::poisson(), 7);
  const auto b = simulate_tomography(u, 2000, NoiseModel::poisson(), 7);
  REQUIRE(a.counts.size() == b.counts.size());
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    CHECK(a.counts[i] == b.counts[i]);
  }
  const double cap = 2000.0 + 5.0 * std::sqrt(2000.0);
  for (double c : a.counts) {
    CHECK(c >= 0.0);
    CHECK(c <= cap);
  }
  CHECK(a.seed.has_value());

  const auto c = simulate_tomography(u, 2000, NoiseModel::poisson(), 8);
  bool any_different = false;
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    if (a.counts[i] != c.counts[i]) any_different = true;
  }
  CHECK(any_different);
}

TEST_CASE("reconstruction from exact identity data is near perfect") {
  const auto t = simulate_tomography(ComplexMatrix::identity(2), 1000,
                                     NoiseModel::none());
  const auto est = reconstruct_ml(t);
  const auto ideal = choi_of_unitary(ComplexMatrix::identity(2));
  CHECK(process_fidelity(est, ideal) > 0.9999);
}

TEST_CASE("noiseless pipeline recovers random unitaries") {
  auto& g = rng();
  for (int rep = 0; rep < 20; ++rep) {
    const auto u = test_support::random_unitary2(g);
    const auto t = simulate_tomography(u, 10000, NoiseModel::none());
    const auto est = reconstruct_ml(t);
    CHECK(process_fidelity(est, choi_of_unitary(u)) > 0.999);
    CHECK(purity(est) > 0.999);
  }
}

TEST_CASE("depolarized channels reconstruct as strictly mixed") {
  const auto u = synth::rot_y(0.8);
  const auto t = simulate_tomography(u, 10000, NoiseModel::depolarizing(0.1));
  const auto est = reconstruct_ml(t);
  CHECK(purity(est) < 1.0 - 1e-3);
  // Fidelity against the noiseless ideal drops by roughly 3s/4.
  CHECK(process_fidelity(est, choi_of_unitary(u)) ==
        doctest::Approx(1.0 - 0.075).epsilon(0.01));
}

TEST_CASE("log likelihood is non-decreasing across iterations") {
  const auto u = test_support::random_unitary2(rng());
  const auto t = simulate_tomography(u, 500, NoiseModel::poisson(), 21);
  const auto diag = reconstruct_ml_diagnostics(t);
  REQUIRE(diag.log_likelihood.size() >= 2);
  for (std::size_t i = 1; i < diag.log_likelihood.size(); ++i) {
    const double scale = std::max(1.0, std::abs(diag.log_likelihood[i - 1]));
    CHECK(diag.log_likelihood[i] >= diag.log_likelihood[i - 1] - 1e-9 * scale);
  }
}

TEST_CASE("reconstruct_ml validates its tomogram") {
  auto t = simulate_tomography(ComplexMatrix::identity(2), 100, NoiseModel::none());
  {
    auto zeroed = t;
    for (double& c : zeroed.counts) c = 0.0;
    CHECK_THROWS_AS(reconstruct_ml(zeroed), ValidationError);
  }
  {
    auto truncated = t;
    truncated.configurations.pop_back();
    truncated.counts.pop_back();
    CHECK_THROWS_AS(reconstruct_ml(truncated), ValidationError);
  }
  {
    auto dup = t;
    dup.configurations[1] = dup.configurations[0];
    CHECK_THROWS_AS(reconstruct_ml(dup), ValidationError);
  }
}

TEST_CASE("process_fidelity canonical values") {
  const auto ideal = choi_of_unitary(ComplexMatrix::identity(2));
  CHECK(process_fidelity(ideal, ideal) == doctest::Approx(1.0).epsilon(1e-12));

  ChoiMatrix mixed{cplx(0.5, 0.0) * ComplexMatrix::identity(4)};
  CHECK(process_fidelity(mixed, ideal) == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(process_fidelity(ideal, mixed), ValidationError);
}

TEST_CASE("purity canonical values and the depolarized closed form") {
  const auto u = test_support::random_unitary2(rng());
  CHECK(purity(choi_of_unitary(u)) == doctest::Approx(1.0).epsilon(1e-10));

  ChoiMatrix mixed{cplx(0.5, 0.0) * ComplexMatrix::identity(4)};
  CHECK(purity(mixed) == doctest::Approx(0.25).epsilon(1e-12));

  // tr(C^2)/tr(C)^2 for (1-s) C_u + (s/2) I evaluates to
  // [4(1-s)^2 + 2s(1-s) + s^2] / 4.
  const double s = 0.5;
  const double expected = (4.0 * (1 - s) * (1 - s) + 2.0 * s * (1 - s) + s * s) / 4.0;
  CHECK(purity(depolarized_choi(u, s)) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("table_report scores noiseless rows to near unity") {
  const auto all_rows = demo_settings();
  std::vector<synth::CUParams> rows = {all_rows[1], all_rows[3]};
  TableOptions opts;
  opts.shots = 2000;
  opts.optimize.restarts = 2;
  const auto report = table_report(rows, opts);
  REQUIRE(report.size() == 2);

  CHECK(report[0].zyz.omega == doctest::Approx(kPi / 8).epsilon(1e-12));
  CHECK(report[0].zyz.gamma == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(report[0].zyz.delta == doctest::Approx(-kPi / 2).epsilon(1e-12));

  for (const auto& row : report) {
    CHECK(row.off.fidelity > 0.999);
    CHECK(row.off.purity > 0.999);
    CHECK(row.on.fidelity > 0.999);
    CHECK(row.on.purity > 0.999);
    CHECK(row.p_succ >= 0.0);
    CHECK(row.p_succ <= 1.0);
  }

  std::ostringstream csv;
  write_table_csv(csv, report);
  const std::string text = csv.str();
  CHECK(text.rfind("phi,theta,alpha,omega,gamma,delta,F_off,P_off,F_on,P_on,p_succ\n",
                   0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("fidelity and purity stay inside their bounds") {
  auto& g = rng();
  for (int rep = 0; rep < 5; ++rep) {
    const auto u = test_support::random_unitary2(g);
    const auto t = simulate_tomography(u, 300, NoiseModel::poisson(), 100 + rep);
    const auto est = reconstruct_ml(t);
    const double f = process_fidelity(est, choi_of_unitary(u));
    const double p = purity(est);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-9);
    CHECK(p >= 0.25 - 1e-9);
    CHECK(p <= 1.0 + 1e-9);
  }
}
