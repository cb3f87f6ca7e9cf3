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

#ifndef QCU_TESTS_TEST_SUPPORT_HPP_
#define QCU_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "qcu/angles.hpp"
#include "qcu/matrix.hpp"
#include "qcu/optics.hpp"
#include "qcu/synth.hpp"

namespace test_support {

using qcu::ComplexMatrix;
using qcu::cplx;

/// Brute-force permanent: sum over all n! permutations. Independent of the
/// Ryser implementation it checks.
inline cplx permanent_by_permutations(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  cplx total = 0.0;
  do {
    cplx prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= a(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Symbolic two-photon Fock evolution: photons enter distinct modes (p, q);
/// returns amplitudes over unordered output pairs (r <= s), with the sqrt(2)
/// bunching factor for r == s. Expands the creation-operator product
/// directly, independent of the permanent rule.
inline std::map<std::pair<std::size_t, std::size_t>, cplx>
evolve_two_photons(const ComplexMatrix& t, std::size_t p, std::size_t q) {
  const std::size_t m = t.rows();
  std::map<std::pair<std::size_t, std::size_t>, cplx> amps;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::pair<std::size_t, std::size_t> key{std::min(i, j), std::max(i, j)};
      amps[key] += t(i, p) * t(j, q);
    }
  }
  // (a_i^dag)^2 |0> = sqrt(2) |2_i>: the accumulated operator coefficient
  // becomes a state amplitude with a sqrt(2) bunching factor.
  for (auto& [key, amp] : amps) {
    if (key.first == key.second) amp *= std::sqrt(2.0);
  }
  return amps;
}

inline std::mt19937& rng() {
  static std::mt19937 engine(0x5eed);
  return engine;
}

inline double uniform(std::mt19937& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline qcu::synth::CUParams random_cu(std::mt19937& g) {
  return {uniform(g, -qcu::kPi, qcu::kPi), uniform(g, -qcu::kPi, qcu::kPi),
          uniform(g, 0.0, qcu::kTwoPi)};
}

/// Haar-ish random 2x2 unitary: random ZYZ angles plus a global phase.
inline ComplexMatrix random_unitary2(std::mt19937& g) {
  using namespace qcu::synth;
  const double gamma = uniform(g, -qcu::kPi, qcu::kPi);
  const double delta = uniform(g, -qcu::kPi, qcu::kPi);
  const double omega = 2.0 * std::asin(std::sqrt(uniform(g, 0.0, 1.0)));
  const double phase = uniform(g, -qcu::kPi, qcu::kPi);
  return cplx(std::cos(phase), std::sin(phase)) *
         (rot_z(gamma) * rot_y(omega) * rot_z(delta));
}

/// Random physical 4x4 mode transfer through the optimizer's parametrization.
inline qcu::optics::ModeTransfer random_contraction4(std::mt19937& g) {
  std::array<double, 36> x;
  for (int i = 0; i < 32; ++i) x[i] = uniform(g, -qcu::kPi, qcu::kPi);
  for (int i = 32; i < 36; ++i) x[i] = uniform(g, 0.0, qcu::kPi / 2.0);
  return qcu::optics::detail::transfer_from_params(x);
}

/// Random 4x4 unitary transfer (all singular values 1).
inline qcu::optics::ModeTransfer random_unitary4(std::mt19937& g) {
  std::array<double, 36> x;
  for (int i = 0; i < 32; ++i) x[i] = uniform(g, -qcu::kPi, qcu::kPi);
  for (int i = 32; i < 36; ++i) x[i] = qcu::kPi / 2.0; // sin^2 = 1
  return qcu::optics::detail::transfer_from_params(x);
}

struct Eig2 {
  std::array<cplx, 2> values;
  std::array<std::array<cplx, 2>, 2> vectors; // vectors[k] belongs to values[k]
};

/// Closed-form eigensystem of a 2x2 unitary (oracle for axis-angle checks).
inline Eig2 eig2_unitary(const ComplexMatrix& u) {
  const cplx tr = u(0, 0) + u(1, 1);
  const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const cplx disc = std::sqrt(tr * tr - 4.0 * det);
  Eig2 out;
  out.values = {(tr - disc) / 2.0, (tr + disc) / 2.0};
  for (int k = 0; k < 2; ++k) {
    const cplx lambda = out.values[k];
    // (u - lambda I) v = 0; pick the better-conditioned row.
    std::array<cplx, 2> v1 = {u(0, 1), lambda - u(0, 0)};
    std::array<cplx, 2> v2 = {lambda - u(1, 1), u(1, 0)};
    const double n1 = std::norm(v1[0]) + std::norm(v1[1]);
    const double n2 = std::norm(v2[0]) + std::norm(v2[1]);
    std::array<cplx, 2> v = n1 >= n2 ? v1 : v2;
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    out.vectors[k] = {v[0] / n, v[1] / n};
  }
  return out;
}

/// |<a|b>| for unit 2-vectors: 1 means equal up to phase.
inline double overlap_mod(const std::array<cplx, 2>& a, const std::array<cplx, 2>& b) {
  return std::abs(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]);
}

} // namespace test_support

#endif // QCU_TESTS_TEST_SUPPORT_HPP_
