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

#include "qcu/tomo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

#include "qcu/angles.hpp"
#include "qcu/detail/rng.hpp"
#include "qcu/errors.hpp"

namespace qcu::tomo {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

struct Config {
  std::size_t in;
  std::size_t meas;
};

std::size_t label_index(const std::string& label) {
  for (std::size_t i = 0; i < kStateLabels.size(); ++i) {
    if (label == kStateLabels[i]) return i;
  }
  throw ValidationError("unknown state label '" + label +
                        "'; expected one of H, V, D, A, R, L");
}

const std::array<std::array<cplx, 2>, 6>& state_table() {
  static const std::array<std::array<cplx, 2>, 6> table = {{
      {cplx(1.0, 0.0), cplx(0.0, 0.0)},             // H
      {cplx(0.0, 0.0), cplx(1.0, 0.0)},             // V
      {cplx(kInvSqrt2, 0.0), cplx(kInvSqrt2, 0.0)}, // D
      {cplx(kInvSqrt2, 0.0), cplx(-kInvSqrt2, 0.0)},// A
      {cplx(kInvSqrt2, 0.0), cplx(0.0, kInvSqrt2)}, // R
      {cplx(kInvSqrt2, 0.0), cplx(0.0, -kInvSqrt2)},// L
  }};
  return table;
}

void check_qubit_unitary(const ComplexMatrix& u, const char* what) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw ValidationError(std::string(what) + ": expected a 2x2 matrix");
  }
  if (!is_unitary(u, 1e-9)) {
    throw ValidationError(std::string(what) + ": matrix is not unitary");
  }
}

/// Measurement operator of one configuration in Choi space:
/// E = conj(|in><in|) (x) |m><m|, so that tr(C E) = <m| Lambda(|in><in|) |m>.
ComplexMatrix config_operator(std::size_t in, std::size_t meas) {
  const auto& s = state_table()[in];
  const auto& m = state_table()[meas];
  ComplexMatrix e(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const cplx in_part = std::conj(s[i]) * s[j];
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          e(i * 2 + k, j * 2 + l) = in_part * m[k] * std::conj(m[l]);
        }
      }
    }
  }
  return e;
}

double expected_probability(const ComplexMatrix& u, std::size_t in,
                            std::size_t meas, const NoiseModel& noise) {
  const auto& s = state_table()[in];
  const auto& m = state_table()[meas];
  cplx amp = 0.0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      amp += std::conj(m[r]) * u(r, c) * s[c];
    }
  }
  double p = std::norm(amp);
  if (noise.kind == NoiseKind::Depolarizing) {
    p = (1.0 - noise.strength) * p + noise.strength / 2.0;
  }
  return p;
}

std::vector<Config> parse_configurations(const Tomogram& t) {
  if (t.configurations.size() != 36 ||
      t.counts.size() != t.configurations.size()) {
    throw ValidationError(
        "reconstruct_ml: expected 36 configurations with matching counts");
  }
  std::array<bool, 36> seen{};
  std::vector<Config> configs;
  configs.reserve(36);
  for (const auto& [in_label, meas_label] : t.configurations) {
    const Config c{label_index(in_label), label_index(meas_label)};
    const std::size_t slot = c.in * 6 + c.meas;
    if (seen[slot]) {
      throw ValidationError("reconstruct_ml: duplicate configuration " +
                            in_label + " -> " + meas_label);
    }
    seen[slot] = true;
    configs.push_back(c);
  }
  return configs;
}

/// Project onto the Hermitian PSD cone and rescale to trace 2.
ComplexMatrix project_psd_trace2(const ComplexMatrix& c) {
  const auto eig = hermitian_eigensystem(c);
  const std::size_t n = c.rows();
  ComplexMatrix out(n, n);
  double tr = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.eigenvalues[k] > 0.0) tr += eig.eigenvalues[k];
  }
  if (!(tr > 0.0)) {
    throw NumericalError("reconstruct_ml: iteration collapsed to zero");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda <= 0.0) continue;
    const double w = 2.0 * lambda / tr;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += w * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
      }
    }
  }
  return out;
}

} // namespace

std::array<cplx, 2> state_vector(const std::string& label) {
  return state_table()[label_index(label)];
}

ChoiMatrix choi_of_unitary(const ComplexMatrix& u) {
  check_qubit_unitary(u, "choi_of_unitary");
  // (I (x) u)(|00> + |11>) = |0> (x) u|0> + |1> (x) u|1>
  const std::array<cplx, 4> v = {u(0, 0), u(1, 0), u(0, 1), u(1, 1)};
  ComplexMatrix c(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      c(i, j) = v[i] * std::conj(v[j]);
    }
  }
  return {std::move(c)};
}

Tomogram simulate_tomography(const ComplexMatrix& u, std::int64_t shots,
                             const NoiseModel& noise, std::uint64_t seed) {
  check_qubit_unitary(u, "simulate_tomography");
  if (shots < 1) {
    throw ValidationError("simulate_tomography: shots must be at least 1");
  }
  if (noise.kind == NoiseKind::Depolarizing &&
      !(noise.strength >= 0.0 && noise.strength <= 1.0)) {
    throw ValidationError(
        "simulate_tomography: depolarizing strength must lie in [0, 1]");
  }

  Tomogram t;
  t.shots_per_config = shots;
  t.seed = (noise.kind == NoiseKind::Poisson)
               ? std::optional<std::uint64_t>(seed)
               : std::nullopt;
  t.configurations.reserve(36);
  t.counts.reserve(36);

  const double count_cap =
      static_cast<double>(shots) + 5.0 * std::sqrt(static_cast<double>(shots));

  std::size_t config_index = 0;
  for (std::size_t in = 0; in < 6; ++in) {
    for (std::size_t meas = 0; meas < 6; ++meas, ++config_index) {
      const double p = expected_probability(u, in, meas, noise);
      double count = static_cast<double>(shots) * p;
      if (noise.kind == NoiseKind::Poisson) {
        detail::SplitMix64 rng(detail::substream_seed(seed, config_index));
        count = static_cast<double>(detail::poisson_sample(rng, count));
        count = std::min(count, count_cap);
      }
      t.configurations.emplace_back(kStateLabels[in], kStateLabels[meas]);
      t.counts.push_back(count);
    }
  }
  return t;
}

MLDiagnostics reconstruct_ml_diagnostics(const Tomogram& t) {
  const std::vector<Config> configs = parse_configurations(t);

  double total = 0.0;
  for (double f : t.counts) {
    if (!(f >= 0.0) || !std::isfinite(f)) {
      throw ValidationError("reconstruct_ml: counts must be finite and nonnegative");
    }
    total += f;
  }
  if (total <= 0.0) {
    throw ValidationError("reconstruct_ml: all counts are zero, insufficient data");
  }

  std::vector<ComplexMatrix> ops;
  ops.reserve(configs.size());
  for (const Config& c : configs) ops.push_back(config_operator(c.in, c.meas));

  constexpr double kProbFloor = 1e-15;
  constexpr double kUpdateTol = 1e-10;
  constexpr std::size_t kMaxIterations = 2000;

  ComplexMatrix choi = 0.5 * ComplexMatrix::identity(4);
  MLDiagnostics diag;
  diag.log_likelihood.reserve(256);

  std::vector<double> probs(configs.size());
  for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
    double loglik = 0.0;
    for (std::size_t c = 0; c < configs.size(); ++c) {
      cplx tr = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          tr += choi(i, j) * ops[c](j, i);
        }
      }
      probs[c] = std::max(tr.real(), kProbFloor);
      if (t.counts[c] > 0.0) loglik += t.counts[c] * std::log(probs[c]);
    }
    diag.log_likelihood.push_back(loglik);

    ComplexMatrix r(4, 4);
    for (std::size_t c = 0; c < configs.size(); ++c) {
      if (t.counts[c] <= 0.0) continue;
      const double w = t.counts[c] / probs[c];
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          r(i, j) += w * ops[c](i, j);
        }
      }
    }

    const ComplexMatrix next = project_psd_trace2(r * choi * r);
    const double update = max_abs_diff(next, choi);
    choi = next;
    diag.iterations = iter + 1;
    if (update < kUpdateTol) break;
  }

  diag.choi = ChoiMatrix{std::move(choi)};
  return diag;
}

ChoiMatrix reconstruct_ml(const Tomogram& t) {
  return reconstruct_ml_diagnostics(t).choi;
}

double process_fidelity(const ChoiMatrix& estimate, const ChoiMatrix& ideal) {
  if (estimate.matrix.rows() != 4 || estimate.matrix.cols() != 4 ||
      ideal.matrix.rows() != 4 || ideal.matrix.cols() != 4) {
    throw ValidationError("process_fidelity: expected 4x4 Choi matrices");
  }
  const double tr_est = trace(estimate.matrix).real();
  const double tr_ideal = trace(ideal.matrix).real();
  if (!(tr_est > 0.0) || !(tr_ideal > 0.0)) {
    throw ValidationError("process_fidelity: Choi matrices must have positive trace");
  }

  const auto eig = hermitian_eigensystem(ideal.matrix);
  const double top = eig.eigenvalues[3];
  if (std::abs(top - tr_ideal) > 1e-8 * std::max(1.0, tr_ideal)) {
    throw ValidationError(
        "process_fidelity: reference is not a rank-1 (unitary) process");
  }

  cplx overlap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      overlap += std::conj(eig.eigenvectors(i, 3)) * estimate.matrix(i, j) *
                 eig.eigenvectors(j, 3);
    }
  }
  return overlap.real() / tr_est;
}

double purity(const ChoiMatrix& c) {
  if (!c.matrix.is_square()) {
    throw ValidationError("purity: Choi matrix must be square");
  }
  const double tr = trace(c.matrix).real();
  if (!(tr > 0.0)) {
    throw ValidationError("purity: Choi matrix must have positive trace");
  }
  cplx tr_sq = 0.0;
  for (std::size_t i = 0; i < c.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < c.matrix.cols(); ++j) {
      tr_sq += c.matrix(i, j) * c.matrix(j, i);
    }
  }
  return tr_sq.real() / (tr * tr);
}

std::vector<synth::CUParams> demo_settings() {
  // {alpha, theta, phi}
  return {
      {0.0, 0.0, 0.0},
      {0.0, kPi / 2.0, kPi / 8.0},
      {kPi / 2.0, 0.0, kPi / 4.0},
      {kPi / 2.0, kPi / 2.0, kPi / 2.0},
      {0.0, kPi / 2.0, 3.0 * kPi / 4.0},
      {kPi / 2.0, 0.0, kPi},
  };
}

std::vector<TableRow> table_report(std::span<const synth::CUParams> rows,
                                   const TableOptions& opts) {
  std::vector<TableRow> out;
  out.reserve(rows.size());
  const ComplexMatrix identity = ComplexMatrix::identity(2);
  const ChoiMatrix ideal_off = choi_of_unitary(identity);

  std::uint64_t channel_index = 0;
  for (const synth::CUParams& raw : rows) {
    TableRow row;
    row.params = synth::normalized(raw);
    row.zyz = synth::cu_to_zyz(row.params);

    const ComplexMatrix w = synth::compose_w(row.params);
    const ChoiMatrix ideal_on = choi_of_unitary(w);

    const Tomogram tomo_off =
        simulate_tomography(identity, opts.shots, opts.noise,
                            detail::substream_seed(opts.seed, channel_index++));
    const Tomogram tomo_on =
        simulate_tomography(w, opts.shots, opts.noise,
                            detail::substream_seed(opts.seed, channel_index++));

    const ChoiMatrix est_off = reconstruct_ml(tomo_off);
    const ChoiMatrix est_on = reconstruct_ml(tomo_on);

    row.off = {process_fidelity(est_off, ideal_off), purity(est_off)};
    row.on = {process_fidelity(est_on, ideal_on), purity(est_on)};
    row.p_succ = optics::optimize_cphase(row.params.phi, opts.optimize).p_succ;
    out.push_back(std::move(row));
  }
  return out;
}

void write_table_csv(std::ostream& os, std::span<const TableRow> rows) {
  os << "phi,theta,alpha,omega,gamma,delta,F_off,P_off,F_on,P_on,p_succ\n";
  char line[320];
  for (const TableRow& r : rows) {
    std::snprintf(line, sizeof(line),
                  "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                  r.params.phi, r.params.theta, r.params.alpha, r.zyz.omega,
                  r.zyz.gamma, r.zyz.delta, r.off.fidelity, r.off.purity,
                  r.on.fidelity, r.on.purity, r.p_succ);
    os << line;
  }
}

} // namespace qcu::tomo
