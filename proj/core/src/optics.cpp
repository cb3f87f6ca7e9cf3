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

#include "qcu/optics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>
#include <utility>

#include "qcu/angles.hpp"
#include "qcu/detail/nelder_mead.hpp"
#include "qcu/detail/rng.hpp"
#include "qcu/errors.hpp"

namespace qcu::optics {

namespace {

using qcu::detail::nelder_mead;
using qcu::detail::NelderMeadOptions;
using qcu::detail::SplitMix64;

inline void sincos_pair(double x, double& s, double& c) {
#if defined(__GNUC__)
  __builtin_sincos(x, &s, &c);
#else
  s = std::sin(x);
  c = std::cos(x);
#endif
}

inline cplx expi(double x) {
  double s, c;
  sincos_pair(x, s, c);
  return {c, s};
}

void check_four_modes(const ModeTransfer& t, const char* what) {
  if (t.matrix.rows() != 4 || t.matrix.cols() != 4) {
    throw ValidationError(std::string(what) +
                          ": expected a 4x4 mode-transfer matrix");
  }
}

struct RestartOutcome {
  double p = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  std::array<double, detail::kTransferParamCount> x{};
};

// Each restart draws from its own stream keyed by (seed, restart index), so
// results do not depend on how restarts are scheduled across threads.
RestartOutcome run_restart(double phi, const OptimizeOptions& opts, int index) {
  SplitMix64 rng(qcu::detail::substream_seed(opts.seed,
                                             static_cast<std::uint64_t>(index)));

  std::array<double, detail::kTransferParamCount> x;
  for (int i = 0; i < 32; ++i) x[i] = rng.uniform(-kPi, kPi);
  for (int i = 32; i < 36; ++i) x[i] = rng.uniform(0.6, kPi / 2.0);

  // The shape penalty is normalized by the success probability: the residual
  // alone vanishes for the all-zero transfer, so a raw penalty rewards
  // shrinking every amplitude. The scale-free ratio leaves -p as the only
  // incentive along the scaling direction.
  const auto penalized = [phi](double mu) {
    return [mu, phi](std::span<const double> v) {
      std::array<cplx, 16> t;
      detail::build_transfer(v, t);
      const auto fit = detail::eval_transfer(t, phi);
      return mu * fit.residual / std::max(fit.p, 1e-9) - fit.p;
    };
  };
  const auto residual_only = [phi](std::span<const double> v) {
    std::array<cplx, 16> t;
    detail::build_transfer(v, t);
    return detail::eval_transfer(t, phi).residual;
  };

  // The penalty weight climbs from penalty/100 to penalty*10^6 in steps of
  // 10^1.5; every stage reruns the simplex up to three times from a fresh
  // geometry, which is what lets it track the curved feasible manifold in
  // 36 dimensions.
  const int chunk = std::max(600, opts.max_iter / 20);
  const double mu_lo = opts.penalty * 1e-2;
  const double mu_hi = opts.penalty * 1e6;
  const double mu_step = std::pow(10.0, 1.5);

  bool first_sweep = true;
  for (double mu = mu_lo; mu <= mu_hi; mu *= mu_step) {
    double prev = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < 3; ++sweep) {
      NelderMeadOptions nm;
      nm.max_evals = chunk;
      nm.init_step = first_sweep ? 0.5 : 0.15;
      first_sweep = false;
      nm.f_tol = 1e-14;
      nm.x_tol = 1e-11;
      const auto res = nelder_mead(penalized(mu), x, nm);
      std::copy(res.x.begin(), res.x.end(), x.begin());
      const bool stalled = prev - res.f < 1e-10;
      prev = res.f;
      if (stalled) break;
    }
  }

  // Feasibility polish: a pure least-squares descent onto the constraint
  // manifold. Moves the point by O(sqrt(residual)), so the success
  // probability is essentially unchanged.
  for (int sweep = 0; sweep < 2; ++sweep) {
    NelderMeadOptions nm;
    nm.max_evals = chunk;
    nm.init_step = 0.005;
    nm.f_tol = 0.0;
    nm.x_tol = 1e-13;
    const auto res = nelder_mead(residual_only, x, nm);
    std::copy(res.x.begin(), res.x.end(), x.begin());
    if (res.f < 1e-14) break;
  }

  std::array<cplx, 16> t;
  detail::build_transfer(x, t);
  const auto fit = detail::eval_transfer(t, phi);
  return {fit.p, fit.residual, x};
}

} // namespace

namespace detail {

void build_transfer(std::span<const double> x, std::array<cplx, 16>& t) {
  // Fixed Givens plane order; together with 4 diagonal phases each factor
  // spans U(4).
  static constexpr std::array<std::pair<int, int>, 6> kPlanes = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

  const auto build_unitary = [](const double* p, std::array<cplx, 16>& u) {
    u.fill(cplx(0.0, 0.0));
    for (int i = 0; i < 4; ++i) u[i * 4 + i] = expi(p[i]);
    for (int g = 0; g < 6; ++g) {
      const auto [i, j] = kPlanes[g];
      double s, c;
      sincos_pair(p[4 + 2 * g], s, c);
      const cplx e = expi(p[5 + 2 * g]);
      for (int r = 0; r < 4; ++r) {
        const cplx a = u[r * 4 + i];
        const cplx b = u[r * 4 + j];
        u[r * 4 + i] = c * a + std::conj(e) * s * b;
        u[r * 4 + j] = -e * s * a + c * b;
      }
    }
  };

  std::array<cplx, 16> q1;
  std::array<cplx, 16> q2;
  build_unitary(x.data(), q1);
  build_unitary(x.data() + 16, q2);

  std::array<double, 4> sv;
  for (int k = 0; k < 4; ++k) {
    const double s = std::sin(x[32 + k]);
    sv[k] = s * s;
  }

  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += q1[i * 4 + k] * sv[k] * q2[k * 4 + j];
      t[i * 4 + j] = acc;
    }
  }
}

ModeTransfer transfer_from_params(std::span<const double> x) {
  if (x.size() != kTransferParamCount) {
    throw ValidationError("transfer_from_params: expected 36 parameters");
  }
  std::array<cplx, 16> t;
  build_transfer(x, t);
  ComplexMatrix m(4, 4, std::vector<cplx>(t.begin(), t.end()));
  return {std::move(m)};
}

MapFit eval_transfer(const std::array<cplx, 16>& t, double phi) {
  // Logical index (k,l) -> 2k+l; photon pair enters modes {k, 2+l}.
  std::array<cplx, 16> map;
  for (int kp = 0; kp < 2; ++kp) {
    for (int lp = 0; lp < 2; ++lp) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          map[(kp * 2 + lp) * 4 + (k * 2 + l)] =
              t[kp * 4 + k] * t[(2 + lp) * 4 + (2 + l)] +
              t[kp * 4 + (2 + l)] * t[(2 + lp) * 4 + k];
        }
      }
    }
  }

  const double p = std::norm(map[0]);
  const double amp = std::sqrt(p);
  const cplx gauge = amp > 0.0 ? std::conj(map[0]) / amp : cplx(1.0, 0.0);

  const std::array<cplx, 4> target_diag = {amp, amp, amp, amp * expi(phi)};
  double residual = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      cplx v = map[i * 4 + j] * gauge;
      if (i == j) v -= target_diag[i];
      residual += std::norm(v);
    }
  }
  return {p, residual};
}

} // namespace detail

double max_singular_value(const ModeTransfer& t) {
  const auto sv = singular_values(t.matrix);
  return sv.empty() ? 0.0 : sv.front();
}

bool is_physical(const ModeTransfer& t, double tol) {
  return max_singular_value(t) <= 1.0 + tol;
}

ComplexMatrix postselected_map(const ModeTransfer& t) {
  check_four_modes(t, "postselected_map");
  ComplexMatrix out(4, 4);
  for (std::size_t kp = 0; kp < 2; ++kp) {
    for (std::size_t lp = 0; lp < 2; ++lp) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          const ComplexMatrix& m = t.matrix;
          out(kp * 2 + lp, k * 2 + l) = m(kp, k) * m(2 + lp, 2 + l) +
                                        m(kp, 2 + l) * m(2 + lp, k);
        }
      }
    }
  }
  return out;
}

CPhaseFit cphase_residual(const ModeTransfer& t, const CPhaseSpec& spec) {
  check_four_modes(t, "cphase_residual");
  std::array<cplx, 16> flat;
  std::copy(t.matrix.data().begin(), t.matrix.data().end(), flat.begin());
  const auto fit = detail::eval_transfer(flat, wrap_two_pi(spec.phi));
  return {fit.p, fit.residual};
}

SuccessReport optimize_cphase(double phi, const OptimizeOptions& opts) {
  if (opts.restarts < 1) {
    throw ValidationError("optimize_cphase: restarts must be at least 1");
  }
  const double phi_n = wrap_two_pi(phi);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(opts.restarts));
  std::atomic<int> cursor{0};
  const auto worker = [&] {
    for (int i = cursor.fetch_add(1); i < opts.restarts; i = cursor.fetch_add(1)) {
      outcomes[static_cast<std::size_t>(i)] = run_restart(phi_n, opts, i);
    }
  };

  int nthreads = opts.threads > 0
                     ? opts.threads
                     : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::clamp(nthreads, 1, opts.restarts);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int best = -1;
  double best_residual_seen = std::numeric_limits<double>::infinity();
  for (int i = 0; i < opts.restarts; ++i) {
    const auto& o = outcomes[static_cast<std::size_t>(i)];
    best_residual_seen = std::min(best_residual_seen, o.residual);
    if (o.residual >= kFeasibleResidual) continue;
    if (best < 0 || o.p > outcomes[static_cast<std::size_t>(best)].p) best = i;
  }
  if (best < 0) {
    throw NoFeasiblePointError(
        "optimize_cphase: no restart reached the residual threshold",
        best_residual_seen);
  }

  const auto& o = outcomes[static_cast<std::size_t>(best)];
  SuccessReport report;
  report.phi = phi_n;
  report.p_succ = o.p;
  report.residual = o.residual;
  report.transfer = detail::transfer_from_params(o.x);
  report.restarts_used = opts.restarts;
  report.seed = opts.seed;
  return report;
}

CurveResult success_curve(std::span<const double> phi_grid,
                          const OptimizeOptions& opts) {
  if (phi_grid.empty()) {
    throw ValidationError("success_curve: phi grid must be nonempty");
  }
  CurveResult result;
  result.points.reserve(phi_grid.size());
  double min_p = std::numeric_limits<double>::infinity();
  double sum_p = 0.0;
  for (double phi : phi_grid) {
    CurvePoint point;
    point.phi = wrap_two_pi(phi);
    try {
      point.report = optimize_cphase(phi, opts);
      point.feasible = true;
    } catch (const NoFeasiblePointError& err) {
      point.feasible = false;
      point.report.phi = point.phi;
      point.report.p_succ = std::numeric_limits<double>::quiet_NaN();
      point.report.residual = err.best_residual();
      point.report.restarts_used = opts.restarts;
      point.report.seed = opts.seed;
    }
    if (point.feasible) {
      ++result.feasible_count;
      sum_p += point.report.p_succ;
      if (point.report.p_succ < min_p) {
        min_p = point.report.p_succ;
        result.argmin_phi = point.phi;
      }
    }
    result.points.push_back(std::move(point));
  }
  if (result.feasible_count > 0) {
    result.min_p = min_p;
    result.mean_p = sum_p / result.feasible_count;
  } else {
    result.min_p = std::numeric_limits<double>::quiet_NaN();
    result.mean_p = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

std::vector<double> uniform_phi_grid(int n) {
  if (n < 1) throw ValidationError("uniform_phi_grid: need at least one point");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    grid[static_cast<std::size_t>(k - 1)] = kTwoPi * k / (n + 1);
  }
  return grid;
}

void write_curve_csv(std::ostream& os, const CurveResult& curve) {
  os << "phi,p_succ,residual\n";
  char line[128];
  for (const auto& point : curve.points) {
    std::snprintf(line, sizeof(line), "%.9g,%.9g,%.9g\n", point.phi,
                  point.report.p_succ, point.report.residual);
    os << line;
  }
}

double cascade_success(std::span<const double> gate_probs) {
  double p = 1.0;
  for (double g : gate_probs) {
    if (!(g >= 0.0 && g <= 1.0)) {
      throw ValidationError("cascade_success: probabilities must lie in [0, 1]");
    }
    p *= g;
  }
  return p;
}

} // namespace qcu::optics
