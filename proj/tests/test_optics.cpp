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
#include "qcu/optics.hpp"
#include "test_support.hpp"

using namespace qcu;
using namespace qcu::optics;
using test_support::rng;
using test_support::uniform;

namespace {

/// Beam-splitter construction that realizes the c-sign gate with amplitude
/// 1/3: both |0> rails attenuated to 1/sqrt(3), the two |1> rails mixed on a
/// rotation with cos = 1/sqrt(3).
ModeTransfer csign_transfer() {
  const double r = 1.0 / std::sqrt(3.0);
  const double s = std::sqrt(2.0 / 3.0);
  ComplexMatrix m(4, 4);
  m(0, 0) = r;
  m(2, 2) = r;
  m(1, 1) = r;
  m(1, 3) = s;
  m(3, 1) = -s;
  m(3, 3) = r;
  return {m};
}

} // namespace

TEST_CASE("postselected map of the identity transfer is the identity") {
  const ModeTransfer t{ComplexMatrix::identity(4)};
  CHECK(max_abs_diff(postselected_map(t), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("postselected map of a diagonal transfer is the product rule") {
  // Mode phases multiply independently: logical (k, l) picks up
  // t_k * t_{2+l}. A diagonal transfer therefore cannot realize a c-phase;
  // entangling phases require mode mixing.
  const cplx a(0.9, 0.1), b(0.7, -0.4), c(0.5, 0.5), d(0.3, -0.8);
  const ModeTransfer t{ComplexMatrix::diagonal({a, b, c, d})};
  const auto map = postselected_map(t);
  const auto expected = ComplexMatrix::diagonal({a * c, a * d, b * c, b * d});
  CHECK(max_abs_diff(map, expected) < 1e-15);
}

TEST_CASE("postselected map rejects wrong mode counts") {
  CHECK_THROWS_AS(postselected_map({ComplexMatrix::identity(3)}), ValidationError);
}

TEST_CASE("postselected map matches the two-photon expansion oracle") {
  auto& g = rng();
  for (int rep = 0; rep < 100; ++rep) {
    const ModeTransfer t = test_support::random_contraction4(g);
    const auto map = postselected_map(t);
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t l = 0; l < 2; ++l) {
        const auto amps = test_support::evolve_two_photons(t.matrix, k, 2 + l);
        for (std::size_t kp = 0; kp < 2; ++kp) {
          for (std::size_t lp = 0; lp < 2; ++lp) {
            const cplx oracle = amps.at({kp, 2 + lp});
            CHECK(std::abs(map(kp * 2 + lp, k * 2 + l) - oracle) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("unitary transfers conserve total two-photon probability") {
  auto& g = rng();
  for (int rep = 0; rep < 20; ++rep) {
    const ModeTransfer t = test_support::random_unitary4(g);
    REQUIRE(is_unitary(t.matrix, 1e-9));
    const auto amps = test_support::evolve_two_photons(t.matrix, 0, 2);
    double total = 0.0;
    for (const auto& [key, amp] : amps) total += std::norm(amp);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("cphase_residual of the identity transfer") {
  const ModeTransfer t{ComplexMatrix::identity(4)};
  {
    const auto fit = cphase_residual(t, {0.0});
    CHECK(fit.p == doctest::Approx(1.0));
    CHECK(fit.residual < 1e-15);
  }
  {
    const double phi = 2.2;
    const auto fit = cphase_residual(t, {phi});
    CHECK(fit.p == doctest::Approx(1.0));
    const double expected = std::norm(cplx(1.0, 0.0) - std::exp(cplx(0.0, phi)));
    CHECK(fit.residual == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("the beam-splitter c-sign transfer achieves p = 1/9 exactly") {
  const auto t = csign_transfer();
  CHECK(max_singular_value(t) <= 1.0 + 1e-12);
  const auto fit = cphase_residual(t, {kPi});
  CHECK(fit.p == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(fit.residual < 1e-12);
}

TEST_CASE("optimizer transfers are physical and reproducible bit for bit") {
  OptimizeOptions opts;
  opts.restarts = 4;
  opts.seed = 42;
  const auto a = optimize_cphase(kPi, opts);
  const auto b = optimize_cphase(kPi, opts);
  CHECK(a.p_succ == b.p_succ);
  CHECK(a.residual == b.residual);
  CHECK(max_abs_diff(a.transfer.matrix, b.transfer.matrix) == 0.0);
  CHECK(a.restarts_used == 4);
  CHECK(a.seed == 42);
  CHECK(is_physical(a.transfer));
  CHECK(a.residual < kFeasibleResidual);

  // Thread count must not affect the result.
  opts.threads = 2;
  const auto c = optimize_cphase(kPi, opts);
  CHECK(c.p_succ == a.p_succ);
  CHECK(max_abs_diff(c.transfer.matrix, a.transfer.matrix) == 0.0);
}

TEST_CASE("optimizer validates options") {
  OptimizeOptions opts;
  opts.restarts = 0;
  CHECK_THROWS_AS(optimize_cphase(kPi, opts), ValidationError);
}

TEST_CASE("success probability is symmetric in phi -> 2pi - phi") {
  OptimizeOptions opts;
  opts.restarts = 16;
  opts.seed = 17;
  const auto lo = optimize_cphase(kPi / 2, opts);
  const auto hi = optimize_cphase(3 * kPi / 2, opts);
  CHECK(std::abs(lo.p_succ - hi.p_succ) < 0.005);
}

TEST_CASE("ordering sanity: p(pi) beats p(3pi/4)") {
  OptimizeOptions opts;
  opts.restarts = 8;
  opts.seed = 5;
  const auto at_pi = optimize_cphase(kPi, opts);
  const auto at_3q = optimize_cphase(3 * kPi / 4, opts);
  CHECK(at_pi.p_succ > at_3q.p_succ);
}

TEST_CASE("cascade_success multiplies independent gates") {
  const double p99 = (1.0 / 9.0) * (1.0 / 9.0);
  const double two[] = {1.0 / 9.0, 1.0 / 9.0};
  CHECK(cascade_success(two) == p99);
  const double single[] = {1.0};
  CHECK(cascade_success(single) == 1.0);
  const double bad[] = {1.2};
  CHECK_THROWS_AS(cascade_success(bad), ValidationError);

  // A single tuned c-phase at pi/2 against the two-c-sign cascade.
  const double gate[] = {0.090};
  const double ratio = cascade_success(gate) / p99;
  CHECK(ratio == doctest::Approx(7.29).epsilon(0.01));
}

TEST_CASE("uniform grid avoids the endpoints and is symmetric") {
  const auto grid = uniform_phi_grid(64);
  REQUIRE(grid.size() == 64);
  CHECK(grid.front() > 0.0);
  CHECK(grid.back() < kTwoPi);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    CHECK(grid[k] + grid[grid.size() - 1 - k] == doctest::Approx(kTwoPi).epsilon(1e-12));
  }
  CHECK_THROWS_AS(uniform_phi_grid(0), ValidationError);
}

TEST_CASE("success_curve emits csv with summary statistics") {
  OptimizeOptions opts;
  opts.restarts = 4;
  opts.seed = 11;
  const double grid[] = {kPi / 2, kPi};
  const auto curve = success_curve(grid, opts);
  REQUIRE(curve.points.size() == 2);
  CHECK(curve.feasible_count == 2);
  CHECK(curve.min_p == doctest::Approx(std::min(curve.points[0].report.p_succ,
                                                curve.points[1].report.p_succ)));
  CHECK(curve.mean_p == doctest::Approx((curve.points[0].report.p_succ +
                                         curve.points[1].report.p_succ) /
                                        2.0));

  std::ostringstream csv;
  write_curve_csv(csv, curve);
  const std::string text = csv.str();
  CHECK(text.rfind("phi,p_succ,residual\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("success_curve rejects an empty grid") {
  CHECK_THROWS_AS(success_curve({}, {}), ValidationError);
}
