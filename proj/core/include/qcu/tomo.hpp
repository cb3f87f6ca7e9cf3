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

#ifndef QCU_TOMO_HPP_
#define QCU_TOMO_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcu/matrix.hpp"
#include "qcu/optics.hpp"
#include "qcu/synth.hpp"

namespace qcu::tomo {

/// Polarization-style six-state set: H, V, D = (H+V)/sqrt2, A = (H-V)/sqrt2,
/// R = (H+iV)/sqrt2, L = (H-iV)/sqrt2.
inline constexpr std::array<const char*, 6> kStateLabels = {"H", "V", "D",
                                                            "A", "R", "L"};

std::array<cplx, 2> state_vector(const std::string& label);

/// Process matrix C = (I (x) u) |Phi><Phi| (I (x) u)^dagger with the
/// unnormalized pair state |Phi> = |00> + |11| (trace 2). Hermitian, PSD;
/// rank 1 exactly for unitary channels.
struct ChoiMatrix {
  ComplexMatrix matrix; // 4x4, ancilla factor first
};

ChoiMatrix choi_of_unitary(const ComplexMatrix& u);

enum class NoiseKind { None, Poisson, Depolarizing };

struct NoiseModel {
  NoiseKind kind = NoiseKind::None;
  double strength = 0.0; // depolarizing mixing weight in [0, 1]

  static NoiseModel none() { return {}; }
  static NoiseModel poisson() { return {NoiseKind::Poisson, 0.0}; }
  static NoiseModel depolarizing(double s) { return {NoiseKind::Depolarizing, s}; }
};

/// Coincidence counts for the 36 (input state, measured state)
/// configurations of six-state process tomography.
struct Tomogram {
  std::vector<std::pair<std::string, std::string>> configurations;
  std::vector<double> counts;
  std::int64_t shots_per_config = 0;
  std::optional<std::uint64_t> seed;
};

/// Simulated tomography of the channel rho -> u rho u^dagger. Noiseless
/// counts are exact expectations shots * |<m|u|in>|^2; poisson draws each
/// count from a seeded Poisson stream; depolarizing replaces the channel by
/// (1-s) u rho u^dagger + s I/2 with exact counts.
Tomogram simulate_tomography(const ComplexMatrix& u, std::int64_t shots,
                             const NoiseModel& noise, std::uint64_t seed = 0);

/// Maximum-likelihood reconstruction: fixed-point R C R ascent over
/// trace-normalized positive matrices, Hermitian-PSD projection each step,
/// stop when the max-norm update falls below 1e-10 or after 2000 iterations.
/// The returned estimate is normalized to trace 2.
ChoiMatrix reconstruct_ml(const Tomogram& t);

struct MLDiagnostics {
  ChoiMatrix choi;
  std::vector<double> log_likelihood; // per accepted iteration
  std::size_t iterations = 0;
};

MLDiagnostics reconstruct_ml_diagnostics(const Tomogram& t);

/// Overlap <phi| C/tr(C) |phi> with |phi> the eigenstate of the (rank-1,
/// unitary-ideal) reference Choi matrix.
double process_fidelity(const ChoiMatrix& estimate, const ChoiMatrix& ideal);

/// tr(C^2)/tr(C)^2: 1 for unitary processes, 1/4 for the maximally mixed one.
double purity(const ChoiMatrix& c);

struct ProcessScores {
  double fidelity = 0.0;
  double purity = 0.0;
};

struct TableRow {
  synth::CUParams params;
  synth::ZYZParams zyz;
  ProcessScores off; // control |0>: identity channel
  ProcessScores on;  // control |1>: W channel
  double p_succ = 0.0;
};

struct TableOptions {
  std::int64_t shots = 10000;
  NoiseModel noise = NoiseModel::none();
  std::uint64_t seed = 0;
  optics::OptimizeOptions optimize{.restarts = 16, .seed = 0, .max_iter = 60000,
                                   .penalty = 1e3, .threads = 0};
};

/// Per parameter row: ZYZ angles, simulated + reconstructed process scores
/// for both control settings, and the optics success probability at the
/// row's conditional phase.
std::vector<TableRow> table_report(std::span<const synth::CUParams> rows,
                                   const TableOptions& opts = {});

/// The six demonstration settings of the controlled-unitary scheme.
std::vector<synth::CUParams> demo_settings();

/// Header phi,theta,alpha,omega,gamma,delta,F_off,P_off,F_on,P_on,p_succ.
void write_table_csv(std::ostream& os, std::span<const TableRow> rows);

} // namespace qcu::tomo

#endif // QCU_TOMO_HPP_
