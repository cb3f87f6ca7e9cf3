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

#include "qcu/multictrl.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qcu/angles.hpp"
#include "qcu/errors.hpp"

namespace qcu::multictrl {

namespace {

cplx expi(double x) { return {std::cos(x), std::sin(x)}; }

void check_gate(const GateOp& g, const QuditCircuit& c) {
  const auto need_control = [&](const char* kind) {
    if (!g.control) {
      throw ValidationError(std::string(kind) + ": control index is required");
    }
    if (*g.control >= c.n_controls) {
      throw ValidationError(std::string(kind) + ": control index out of range");
    }
  };
  switch (g.kind) {
  case GateKind::ControlledLevelSwap:
    need_control("controlled-level-swap");
    if (g.level_a == g.level_b || g.level_a >= c.target_levels ||
        g.level_b >= c.target_levels) {
      throw ValidationError("controlled-level-swap: invalid level pair");
    }
    break;
  case GateKind::ControlledLevelPhase:
    need_control("controlled-level-phase");
    if (g.level >= c.target_levels) {
      throw ValidationError("controlled-level-phase: level out of range");
    }
    break;
  case GateKind::LocalUnitary:
    if (g.control) {
      throw ValidationError("local-unitary: must be unconditional");
    }
    if (g.local.rows() != 2 || g.local.cols() != 2) {
      throw ValidationError("local-unitary: expected a 2x2 matrix");
    }
    break;
  }
}

} // namespace

GateOp GateOp::level_swap(std::size_t control, std::size_t a, std::size_t b) {
  GateOp g;
  g.kind = GateKind::ControlledLevelSwap;
  g.control = control;
  g.level_a = a;
  g.level_b = b;
  return g;
}

GateOp GateOp::level_phase(std::size_t control, std::size_t level, double angle) {
  GateOp g;
  g.kind = GateKind::ControlledLevelPhase;
  g.control = control;
  g.level = level;
  g.angle = angle;
  return g;
}

GateOp GateOp::local_unitary(const ComplexMatrix& v) {
  GateOp g;
  g.kind = GateKind::LocalUnitary;
  g.local = v;
  return g;
}

QuditCircuit build_ncu(std::size_t n, double theta,
                       const std::optional<ComplexMatrix>& v) {
  if (n < 1) {
    throw ValidationError("build_ncu: need at least one control qubit");
  }
  if (v && (v->rows() != 2 || v->cols() != 2)) {
    throw ValidationError("build_ncu: v must be a 2x2 matrix");
  }

  QuditCircuit c;
  c.n_controls = n;
  c.target_levels = n + 1;

  if (v) c.gates.push_back(GateOp::local_unitary(*v));

  // Shelving ladder: control C_i (0-based index i-1) lifts level i to i+1,
  // so the top level is populated only when every control fires and the
  // target started in |1>.
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    c.gates.push_back(GateOp::level_swap(i - 1, i, i + 1));
  }
  c.gates.push_back(GateOp::level_phase(n - 1, n, theta));
  for (std::size_t i = n - 1; i >= 1; --i) {
    c.gates.push_back(GateOp::level_swap(i - 1, i, i + 1));
  }

  if (v) c.gates.push_back(GateOp::local_unitary(adjoint(*v)));
  return c;
}

ComplexMatrix simulate_circuit(const QuditCircuit& c) {
  if (c.target_levels < 2) {
    throw ValidationError("simulate_circuit: target needs at least two levels");
  }
  if (c.n_controls >= 16) {
    throw ValidationError("simulate_circuit: too many control qubits");
  }
  const std::size_t ctrl_dim = std::size_t{1} << c.n_controls;
  const std::size_t dim = ctrl_dim * c.target_levels;
  if (dim > kSimulateDimensionCap) {
    throw ValidationError("simulate_circuit: dimension exceeds the 4096 cap");
  }

  ComplexMatrix u = ComplexMatrix::identity(dim);
  std::vector<cplx> tmp(dim);

  for (const GateOp& g : c.gates) {
    check_gate(g, c);
    switch (g.kind) {
    case GateKind::ControlledLevelSwap: {
      const std::size_t bit = c.n_controls - 1 - *g.control; // C1 is most significant
      for (std::size_t ctrl = 0; ctrl < ctrl_dim; ++ctrl) {
        if (((ctrl >> bit) & 1u) == 0) continue;
        const std::size_t ra = ctrl * c.target_levels + g.level_a;
        const std::size_t rb = ctrl * c.target_levels + g.level_b;
        for (std::size_t j = 0; j < dim; ++j) std::swap(u(ra, j), u(rb, j));
      }
      break;
    }
    case GateKind::ControlledLevelPhase: {
      const std::size_t bit = c.n_controls - 1 - *g.control;
      const cplx phase = expi(g.angle);
      for (std::size_t ctrl = 0; ctrl < ctrl_dim; ++ctrl) {
        if (((ctrl >> bit) & 1u) == 0) continue;
        const std::size_t r = ctrl * c.target_levels + g.level;
        for (std::size_t j = 0; j < dim; ++j) u(r, j) *= phase;
      }
      break;
    }
    case GateKind::LocalUnitary: {
      const cplx v00 = g.local(0, 0), v01 = g.local(0, 1);
      const cplx v10 = g.local(1, 0), v11 = g.local(1, 1);
      for (std::size_t ctrl = 0; ctrl < ctrl_dim; ++ctrl) {
        const std::size_t r0 = ctrl * c.target_levels + 0;
        const std::size_t r1 = ctrl * c.target_levels + 1;
        for (std::size_t j = 0; j < dim; ++j) {
          const cplx a = u(r0, j);
          const cplx b = u(r1, j);
          u(r0, j) = v00 * a + v01 * b;
          u(r1, j) = v10 * a + v11 * b;
        }
      }
      break;
    }
    }
  }
  return u;
}

VerifyReport verify_ncu(const QuditCircuit& c, std::size_t n, double theta,
                        const std::optional<ComplexMatrix>& v) {
  if (c.n_controls != n) {
    throw ValidationError("verify_ncu: circuit has a different control count");
  }
  const ComplexMatrix sim = simulate_circuit(c);
  const std::size_t ctrl_dim = std::size_t{1} << n;
  const std::size_t qubit_dim = ctrl_dim * 2;

  // Ideal n-controlled-U on n+1 qubits, U = v^dagger diag(1, e^{i theta}) v.
  ComplexMatrix u2 = ComplexMatrix::diagonal({1.0, expi(theta)});
  if (v) u2 = adjoint(*v) * u2 * (*v);
  ComplexMatrix ideal = ComplexMatrix::identity(qubit_dim);
  const std::size_t last = ctrl_dim - 1;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      ideal(last * 2 + i, last * 2 + j) = u2(i, j);
    }
  }

  VerifyReport report;
  for (std::size_t cj = 0; cj < ctrl_dim; ++cj) {
    for (std::size_t lj = 0; lj < 2; ++lj) {
      const std::size_t col = cj * c.target_levels + lj;
      double leak_sq = 0.0;
      for (std::size_t ci = 0; ci < ctrl_dim; ++ci) {
        for (std::size_t li = 0; li < c.target_levels; ++li) {
          const std::size_t row = ci * c.target_levels + li;
          const cplx entry = sim(row, col);
          if (li < 2) {
            const cplx ref = ideal(ci * 2 + li, cj * 2 + lj);
            report.deviation = std::max(report.deviation, std::abs(entry - ref));
          } else {
            leak_sq += std::norm(entry);
          }
        }
      }
      report.leakage = std::max(report.leakage, std::sqrt(leak_sq));
    }
  }
  return report;
}

ResourceReport resource_report(std::size_t n, double phi, double p_cnot,
                               double p_cphase) {
  (void)phi; // the conditional phase only labels which c-phase gets cascaded
  if (n < 1) {
    throw ValidationError("resource_report: need at least one control qubit");
  }
  if (!(p_cnot > 0.0 && p_cnot <= 1.0) || !(p_cphase > 0.0 && p_cphase <= 1.0)) {
    throw ValidationError("resource_report: probabilities must lie in (0, 1]");
  }
  ResourceReport r;
  r.n_controls = n;
  r.cnot_equivalent_count = 2 * (n - 1);
  r.cphase_count = 1;
  r.two_qubit_gate_count = r.cnot_equivalent_count + r.cphase_count;
  r.success_probability_ours =
      std::pow(p_cnot, static_cast<double>(2 * (n - 1))) * p_cphase;
  r.success_probability_baseline = std::pow(p_cnot, static_cast<double>(2 * n));
  return r;
}

} // namespace qcu::multictrl
