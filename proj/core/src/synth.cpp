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

#include "qcu/synth.hpp"

#include <algorithm>
#include <cmath>

#include "qcu/angles.hpp"
#include "qcu/errors.hpp"

namespace qcu::synth {

namespace {

constexpr double kTinyAmplitude = 1e-14;

cplx expi(double x) { return {std::cos(x), std::sin(x)}; }

// Z(gamma) Y(omega) Z(delta) flips sign when a single phase angle shifts by
// 2*pi, so wrapping gamma and delta into (-pi, pi] independently can negate
// the composed matrix. Callers must compensate for odd wrap parity.
struct PhasePair {
  double gamma;
  double delta;
  bool wrapped_odd;
};

PhasePair wrap_phase_pair(double gamma_raw, double delta_raw) {
  const double gamma = wrap_pi(gamma_raw);
  const double delta = wrap_pi(delta_raw);
  const auto turns = [](double wrapped, double raw) {
    return static_cast<long>(std::lround((wrapped - raw) / kTwoPi));
  };
  const long parity = turns(gamma, gamma_raw) + turns(delta, delta_raw);
  return {gamma, delta, (parity % 2) != 0};
}

} // namespace

CUParams normalized(const CUParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.theta) || !std::isfinite(p.phi)) {
    throw ValidationError("CUParams: angles must be finite");
  }
  return {wrap_pi(p.alpha), wrap_pi(p.theta), wrap_two_pi(p.phi)};
}

ComplexMatrix rot_z(double alpha) {
  return ComplexMatrix::diagonal({expi(-alpha / 2.0), expi(alpha / 2.0)});
}

ComplexMatrix rot_y(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return ComplexMatrix{{c, s}, {-s, c}};
}

ComplexMatrix cphase_matrix(double phi) {
  return ComplexMatrix::diagonal({1.0, 1.0, 1.0, expi(phi)});
}

ComplexMatrix controlled_gate_matrix(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw ValidationError("controlled_gate_matrix: expected a 2x2 matrix");
  }
  ComplexMatrix g = ComplexMatrix::identity(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      g(2 + i, 2 + j) = u(i, j);
    }
  }
  return g;
}

ComplexMatrix compose_w(const CUParams& p) {
  return rot_z(-p.alpha) * rot_y(-p.theta) * rot_z(p.phi) * rot_y(p.theta) *
         rot_z(p.alpha);
}

AuxAmplitudes aux_amplitudes(const CUParams& p) {
  const double ht = p.theta / 2.0;
  const double hp = p.phi / 2.0;
  const cplx chi = expi(-hp) * (std::cos(ht) * std::cos(ht)) +
                   expi(hp) * (std::sin(ht) * std::sin(ht));
  const cplx xi = expi(p.alpha - kPi / 2.0) * std::sin(p.theta) * std::sin(hp);
  return {chi, xi};
}

ZYZParams cu_to_zyz(const CUParams& raw) {
  const CUParams p = normalized(raw);
  const auto [chi, xi] = aux_amplitudes(p);

  ZYZParams z;
  z.omega = 2.0 * std::atan2(std::abs(xi), std::abs(chi));
  z.global_phase = 0.0;

  // phi == 0 makes W the identity for every (alpha, theta); report the
  // canonical all-zero triple instead of the alpha-dependent gauge.
  if (p.phi == 0.0) return z;

  double sum;  // gamma + delta = -2 arg(chi)
  double diff; // delta - gamma = 2 arg(xi); the closed form 2*alpha - pi
               // holds on the sin(theta) >= 0 branch
  if (std::abs(xi) < kTinyAmplitude) {
    sum = -2.0 * std::arg(chi);
    diff = 2.0 * p.alpha - kPi;
  } else if (std::abs(chi) < kTinyAmplitude) {
    sum = 0.0;
    diff = 2.0 * std::arg(xi);
  } else {
    sum = -2.0 * std::arg(chi);
    diff = 2.0 * std::arg(xi);
  }

  const PhasePair pair = wrap_phase_pair((sum - diff) / 2.0, (sum + diff) / 2.0);
  z.gamma = pair.gamma;
  z.delta = pair.delta;
  if (pair.wrapped_odd) {
    // Undoing one wrap keeps the composed matrix equal to W; delta leaves the
    // principal window by a full turn because zero global phase offers no
    // other place to put the sign.
    z.delta += (z.delta <= 0.0) ? kTwoPi : -kTwoPi;
  }
  return z;
}

CUParams zyz_to_cu(const ZYZParams& z) {
  if (std::abs(z.global_phase) > 1e-12) {
    throw ValidationError(
        "zyz_to_cu: nonzero global phase is not realizable by the scheme; "
        "route it to the control line");
  }
  const double half_sum = (z.gamma + z.delta) / 2.0;
  const double cos_half_omega = std::cos(z.omega / 2.0);
  const double c = std::cos(half_sum) * cos_half_omega;
  // sin(phi/2) = sqrt(1 - c^2) expands exactly into these two terms, which
  // keeps phi and theta well conditioned where acos would lose half the
  // significant digits.
  const double sin_part = std::sin(half_sum) * cos_half_omega;
  const double denom = std::hypot(std::sin(z.omega / 2.0), sin_part);
  const double phi = 2.0 * std::atan2(denom, c);

  double theta = 0.0;
  if (denom > 1e-12) {
    theta = std::atan2(std::sin(z.omega / 2.0), sin_part);
  }
  const double alpha = (z.delta - z.gamma + kPi) / 2.0;
  return normalized({alpha, theta, phi});
}

ZYZParams zyz_decompose(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw ValidationError("zyz_decompose: expected a 2x2 matrix");
  }
  if (!is_unitary(u, 1e-9)) {
    throw ValidationError("zyz_decompose: matrix is not unitary");
  }

  const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  double beta = 0.5 * std::arg(det);
  const cplx strip = expi(-beta);
  const cplx chi = u(0, 0) * strip;
  const cplx xi = u(0, 1) * strip;

  ZYZParams z;
  z.omega = 2.0 * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));

  double sum;
  double diff;
  if (std::abs(xi) < kTinyAmplitude) {
    sum = -2.0 * std::arg(chi);
    diff = 0.0; // omega == 0: only gamma + delta matters, split evenly
  } else if (std::abs(chi) < kTinyAmplitude) {
    sum = 0.0;
    diff = 2.0 * std::arg(xi);
  } else {
    sum = -2.0 * std::arg(chi);
    diff = 2.0 * std::arg(xi);
  }

  const PhasePair pair = wrap_phase_pair((sum - diff) / 2.0, (sum + diff) / 2.0);
  z.gamma = pair.gamma;
  z.delta = pair.delta;
  if (pair.wrapped_odd) beta += kPi;
  z.global_phase = wrap_pi(beta);
  return z;
}

AxisAngle axis_angle(const CUParams& raw) {
  const CUParams p = normalized(raw);
  AxisAngle out;
  out.psi[0] = expi(p.alpha / 2.0) * std::cos(p.theta / 2.0);
  out.psi[1] = expi(-p.alpha / 2.0) * std::sin(p.theta / 2.0);
  out.angle = p.phi;
  return out;
}

CUParams params_for_axis_angle(const AxisAngle& target) {
  const double n = std::sqrt(std::norm(target.psi[0]) + std::norm(target.psi[1]));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw ValidationError("params_for_axis_angle: axis state must be nonzero");
  }
  const cplx p0 = target.psi[0] / n;
  const cplx p1 = target.psi[1] / n;
  const double alpha =
      (std::abs(p1) < kTinyAmplitude || std::abs(p0) < kTinyAmplitude)
          ? 0.0
          : std::arg(p0) - std::arg(p1);
  const double theta = 2.0 * std::atan2(std::abs(p1), std::abs(p0));
  return normalized({alpha, theta, target.angle});
}

ControlledUPlan synthesize_controlled_u(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw ValidationError("synthesize_controlled_u: expected a 2x2 matrix");
  }
  if (!is_unitary(u, 1e-9)) {
    throw ValidationError("synthesize_controlled_u: matrix is not unitary");
  }
  ZYZParams z = zyz_decompose(u);
  const double beta = z.global_phase;
  z.global_phase = 0.0;

  ControlledUPlan plan;
  plan.cu = zyz_to_cu(z);
  // The c-phase contributes diag(1, e^{i phi}) = e^{i phi/2} Z(phi) on the
  // signal, so the conditioned block carries an extra phi/2 beyond W; the
  // control-line rotation must supply beta - phi/2 to land on u.
  plan.control_phase = wrap_pi(beta - plan.cu.phi / 2.0);
  plan.target_unitary = u;
  return plan;
}

ComplexMatrix assemble_plan(const ControlledUPlan& plan) {
  const CUParams& p = plan.cu;
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ComplexMatrix pre = rot_y(p.theta) * rot_z(p.alpha);
  const ComplexMatrix post = rot_z(-p.alpha) * rot_y(-p.theta);
  return kron(rot_z(plan.control_phase), i2) * kron(i2, post) *
         cphase_matrix(p.phi) * kron(i2, pre);
}

} // namespace qcu::synth
