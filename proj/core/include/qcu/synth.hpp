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

#ifndef QCU_SYNTH_HPP_
#define QCU_SYNTH_HPP_

#include <array>

#include "qcu/matrix.hpp"

namespace qcu::synth {

/// Parameters of the controlled-unitary scheme: the signal qubit sees
/// Z(alpha), Y(theta) before the tunable c-phase and the inverse rotations
/// after it, so the conditioned operation is
/// W = Z(-alpha) Y(-theta) Z(phi) Y(theta) Z(alpha).
struct CUParams {
  double alpha = 0.0; ///< z-rotation angle, wrapped to (-pi, pi]
  double theta = 0.0; ///< y-rotation angle, wrapped to (-pi, pi]
  double phi = 0.0;   ///< conditional phase, wrapped to [0, 2*pi)
};

/// Wrap angles into the canonical ranges and reject non-finite input.
CUParams normalized(const CUParams& p);

/// Standard Euler decomposition U = e^{i global_phase} Z(gamma) Y(omega) Z(delta).
///
/// omega always lies in [0, pi] and global_phase in (-pi, pi]. gamma and
/// delta are reported in (-pi, pi] whenever the matrix admits it at the given
/// global phase; determinant-one matrices in the opposite lift of SU(2) force
/// one of them a turn of 2*pi outside that window (see cu_to_zyz).
struct ZYZParams {
  double gamma = 0.0;
  double omega = 0.0;
  double delta = 0.0;
  double global_phase = 0.0;
};

/// Off-diagonal/diagonal amplitudes of W in its compact 2x2 form
/// [[chi, xi], [-conj(xi), conj(chi)]].
struct AuxAmplitudes {
  cplx chi;
  cplx xi;
};

/// Rotation-axis state and rotation angle of a single-qubit unitary:
/// W = e^{-i angle/2} |psi><psi| + e^{+i angle/2} |psi_perp><psi_perp|.
struct AxisAngle {
  std::array<cplx, 2> psi{};
  double angle = 0.0;
};

/// Recipe for one controlled-unitary gate: scheme parameters for the signal
/// qubit, an unconditional z-rotation on the control line that fixes the
/// phase budget, and the 2x2 unitary the assembled gate realizes.
struct ControlledUPlan {
  CUParams cu;
  double control_phase = 0.0;
  ComplexMatrix target_unitary;
};

/// diag(e^{-i alpha/2}, e^{+i alpha/2})
ComplexMatrix rot_z(double alpha);

/// [[cos(theta/2), sin(theta/2)], [-sin(theta/2), cos(theta/2)]]
ComplexMatrix rot_y(double theta);

/// Two-qubit tunable c-phase diag(1, 1, 1, e^{i phi}); control is the first
/// tensor factor, basis order |00>, |01>, |10>, |11>.
ComplexMatrix cphase_matrix(double phi);

/// diag-block(I2, u): u applied to the signal qubit when the control is |1>.
ComplexMatrix controlled_gate_matrix(const ComplexMatrix& u);

/// W = Z(-alpha) Y(-theta) Z(phi) Y(theta) Z(alpha); unitary, determinant 1.
ComplexMatrix compose_w(const CUParams& p);

/// chi = e^{-i phi/2} cos^2(theta/2) + e^{+i phi/2} sin^2(theta/2),
/// xi  = e^{i (alpha - pi/2)} sin(theta) sin(phi/2).
AuxAmplitudes aux_amplitudes(const CUParams& p);

/// Forward map {alpha, theta, phi} -> {gamma, omega, delta}; global_phase is
/// always zero and the returned triple reproduces compose_w(p) as a matrix.
/// phi == 0 collapses W to the identity for every (alpha, theta) and returns
/// the all-zero triple.
ZYZParams cu_to_zyz(const CUParams& p);

/// Inverse map; exact for any real (gamma, omega, delta) with zero global
/// phase: compose_w of the result equals Z(gamma) Y(omega) Z(delta).
/// Nonzero global_phase throws ValidationError (route the phase to the
/// control line, see synthesize_controlled_u).
CUParams zyz_to_cu(const ZYZParams& z);

/// ZYZ decomposition of an arbitrary 2x2 unitary. gamma and delta land in
/// (-pi, pi]; sign parity is absorbed into global_phase.
ZYZParams zyz_decompose(const ComplexMatrix& u);

/// Rotation axis |psi> = (e^{i alpha/2} cos(theta/2), e^{-i alpha/2} sin(theta/2))
/// and rotation angle phi of compose_w(p).
AxisAngle axis_angle(const CUParams& p);

/// Invert axis_angle: scheme parameters whose compose_w realizes the rotation
/// by `angle` about the axis state `psi`.
CUParams params_for_axis_angle(const AxisAngle& target);

/// Full synthesis pipeline for an arbitrary 2x2 unitary u: ZYZ-decompose,
/// realize the special-unitary part through the scheme, and absorb the
/// remaining phase into a z-rotation on the control line.
ControlledUPlan synthesize_controlled_u(const ComplexMatrix& u);

/// (rot_z(control_phase) (x) I) (I (x) Z(-a)Y(-t)) CPHASE(phi) (I (x) Y(t)Z(a));
/// equals diag-block(I2, target_unitary) up to one global phase.
ComplexMatrix assemble_plan(const ControlledUPlan& plan);

} // namespace qcu::synth

#endif // QCU_SYNTH_HPP_
