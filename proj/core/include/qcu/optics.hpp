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

#ifndef QCU_OPTICS_HPP_
#define QCU_OPTICS_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qcu/matrix.hpp"

namespace qcu::optics {

/// Linear map on optical mode amplitudes. Physical transfers are
/// contractions (largest singular value <= 1): any such matrix is a corner
/// of a larger unitary acting on extra vacuum/loss modes, which is the most
/// general passive network with no ancilla photons. For the two-photon gate
/// model, modes 0,1 carry the control qubit (|0>, |1>) and modes 2,3 the
/// signal qubit.
struct ModeTransfer {
  ComplexMatrix matrix;
};

double max_singular_value(const ModeTransfer& t);

/// True iff the transfer is a physical contraction within tol.
bool is_physical(const ModeTransfer& t, double tol = 1e-9);

/// Target for the tunable c-phase gate |kl> -> e^{i phi dk1 dl1} |kl>.
struct CPhaseSpec {
  double phi = 0.0; // conditional phase in [0, 2*pi)
};

/// Coincidence-post-selected logical map of a 4-mode transfer: entry
/// ((k'l'),(kl)) is the permanent of the 2x2 submatrix with output modes
/// {k', 2+l'} and input modes {k, 2+l}. Unnormalized: the squared moduli are
/// post-selection success probabilities.
ComplexMatrix postselected_map(const ModeTransfer& t);

struct CPhaseFit {
  double p = 0.0;        // |T00|^2, the basis-uniform success probability
  double residual = 0.0; // squared deviation from p^(1/2) * diag(1,1,1,e^{i phi})
};

/// Success probability and constraint violation of a candidate transfer
/// against the c-phase target, with the global phase gauged so that T00 is
/// real and nonnegative.
CPhaseFit cphase_residual(const ModeTransfer& t, const CPhaseSpec& spec);

struct OptimizeOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  int max_iter = 60000; // objective-evaluation budget per restart
  double penalty = 1e3; // starting penalty weight, escalated x10 per stage
  int threads = 0;      // 0 = hardware concurrency; restarts run independently
};

struct SuccessReport {
  double phi = 0.0;
  double p_succ = 0.0;
  double residual = 0.0;
  ModeTransfer transfer;
  int restarts_used = 0;
  std::uint64_t seed = 0;
};

/// A point is accepted as a valid c-phase realization when its residual is
/// below this threshold.
inline constexpr double kFeasibleResidual = 1e-8;

/// Numerically recover the optimal success probability of the post-selected
/// c-phase gate at the given conditional phase. Transfers are parametrized
/// as Q1 diag(s) Q2 (16 angles per unitary factor, s in [0,1]^4) and searched
/// by penalized Nelder-Mead from seeded random starts. Deterministic for a
/// fixed (phi, seed, restarts), regardless of thread count. Throws
/// NoFeasiblePointError when no restart meets the residual threshold.
SuccessReport optimize_cphase(double phi, const OptimizeOptions& opts = {});

struct CurvePoint {
  double phi = 0.0;
  bool feasible = false;
  SuccessReport report; // best attempt; p_succ is meaningless when infeasible
};

struct CurveResult {
  std::vector<CurvePoint> points;
  double min_p = 0.0;      // over feasible points
  double mean_p = 0.0;     // over feasible points
  double argmin_phi = 0.0; // phi attaining min_p
  int feasible_count = 0;
};

/// optimize_cphase on every grid point; per-point failures are recorded
/// rather than thrown.
CurveResult success_curve(std::span<const double> phi_grid,
                          const OptimizeOptions& opts = {});

/// n interior points 2*pi*k/(n+1), k = 1..n: excludes phi = 0 and is
/// symmetric under phi -> 2*pi - phi.
std::vector<double> uniform_phi_grid(int n);

/// Header "phi,p_succ,residual", one row per point, 9 significant digits.
/// Infeasible points carry nan in the p_succ column.
void write_curve_csv(std::ostream& os, const CurveResult& curve);

/// Product of independent post-selected gate success probabilities.
double cascade_success(std::span<const double> gate_probs);

namespace detail {

inline constexpr int kTransferParamCount = 36;

/// Decode the 36-parameter search vector into a 4x4 transfer (row-major).
void build_transfer(std::span<const double> x, std::array<cplx, 16>& t);

ModeTransfer transfer_from_params(std::span<const double> x);

struct MapFit {
  double p;
  double residual;
};

/// Fast path used inside the optimizer loop; same quantities as
/// cphase_residual but on a stack matrix.
MapFit eval_transfer(const std::array<cplx, 16>& t, double phi);

} // namespace detail

} // namespace qcu::optics

#endif // QCU_OPTICS_HPP_
