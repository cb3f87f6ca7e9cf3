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

#ifndef QCU_DETAIL_NELDER_MEAD_HPP_
#define QCU_DETAIL_NELDER_MEAD_HPP_

#include <functional>
#include <span>
#include <vector>

namespace qcu::detail {

struct NelderMeadOptions {
  int max_evals = 10000;
  double f_tol = 1e-14;   // stop when the simplex value spread falls below
  double x_tol = 1e-12;   // stop when the simplex collapses geometrically
  double init_step = 0.3; // initial per-coordinate displacement
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
};

/// Downhill-simplex minimization with dimension-adaptive expansion and
/// contraction coefficients. Deterministic: no internal randomness.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::span<const double> x0,
                             const NelderMeadOptions& opts);

} // namespace qcu::detail

#endif // QCU_DETAIL_NELDER_MEAD_HPP_
