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

#ifndef QCU_MULTICTRL_HPP_
#define QCU_MULTICTRL_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "qcu/matrix.hpp"

namespace qcu::multictrl {

enum class GateKind {
  ControlledLevelSwap,  // swap target levels (a, b) when the control is |1>
  ControlledLevelPhase, // multiply target level `level` by e^{i angle} when
                        // the control is |1>
  LocalUnitary,         // unconditional 2x2 unitary on target levels {0, 1}
};

struct GateOp {
  GateKind kind = GateKind::ControlledLevelPhase;
  std::optional<std::size_t> control; // control-qubit index; empty for locals
  std::size_t level_a = 0;            // swap gates
  std::size_t level_b = 0;
  std::size_t level = 0; // phase gates
  double angle = 0.0;
  ComplexMatrix local; // local-unitary gates, acting on levels {0, 1}

  static GateOp level_swap(std::size_t control, std::size_t a, std::size_t b);
  static GateOp level_phase(std::size_t control, std::size_t level, double angle);
  static GateOp local_unitary(const ComplexMatrix& v);
};

/// Gate list over n control qubits and one multi-level target. Basis order:
/// control qubits most significant (C1 first), target level least
/// significant. Gates apply in list order.
struct QuditCircuit {
  std::size_t n_controls = 0;
  std::size_t target_levels = 2;
  std::vector<GateOp> gates;
};

inline constexpr std::size_t kSimulateDimensionCap = 4096;

/// n-times controlled phase circuit on an (n+1)-level target: a nested ladder
/// of 2(n-1) controlled level swaps shelving the target |1> population up one
/// level per satisfied control, a single controlled phase on the top level,
/// and the ladder undone in reverse. With v given, the circuit conjugates the
/// phase so the controlled operation becomes v^dagger diag(1, e^{i theta}) v.
QuditCircuit build_ncu(std::size_t n, double theta,
                       const std::optional<ComplexMatrix>& v = std::nullopt);

/// Dense unitary of the whole circuit (dimension 2^n * target_levels).
ComplexMatrix simulate_circuit(const QuditCircuit& c);

struct VerifyReport {
  double deviation = 0.0; // max-norm error against the ideal controlled gate
  double leakage = 0.0;   // worst column norm escaping the qubit subspace
};

/// Compare the circuit, restricted to target levels {0, 1}, against the ideal
/// n-controlled-U on n+1 qubits with U = v^dagger diag(1, e^{i theta}) v.
VerifyReport verify_ncu(const QuditCircuit& c, std::size_t n, double theta,
                        const std::optional<ComplexMatrix>& v = std::nullopt);

struct ResourceReport {
  std::size_t n_controls = 0;
  std::size_t two_qubit_gate_count = 0;
  std::size_t cnot_equivalent_count = 0;
  std::size_t cphase_count = 0;
  double success_probability_ours = 0.0;
  double success_probability_baseline = 0.0;
};

/// Post-selected success probabilities of the qudit construction
/// (p_cnot^{2(n-1)} * p_cphase) against the all-CNOT baseline (p_cnot^{2n}).
/// phi labels the conditional phase the single c-phase gate is tuned to.
ResourceReport resource_report(std::size_t n, double phi, double p_cnot,
                               double p_cphase);

} // namespace qcu::multictrl

#endif // QCU_MULTICTRL_HPP_
