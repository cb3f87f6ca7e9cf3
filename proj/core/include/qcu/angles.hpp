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

#ifndef QCU_ANGLES_HPP_
#define QCU_ANGLES_HPP_

#include <cmath>
#include <numbers>

namespace qcu {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wrap an angle to (-pi, pi]. Exact at the endpoint: -pi maps to +pi.
inline double wrap_pi(double x) {
  double y = std::fmod(x + kPi, kTwoPi);
  if (y <= 0.0) y += kTwoPi;
  return y - kPi;
}

/// Wrap an angle to [0, 2*pi). 2*pi maps to 0.
inline double wrap_two_pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;
  return y;
}

} // namespace qcu

#endif // QCU_ANGLES_HPP_
