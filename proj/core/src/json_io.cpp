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

#include "qcu/json_io.hpp"

#include <cmath>
#include <string>

#include "qcu/errors.hpp"

namespace qcu {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* field, const char* what) {
  if (!j.is_object()) {
    throw ValidationError(std::string(what) + ": expected a JSON object");
  }
  const auto it = j.find(field);
  if (it == j.end()) {
    throw ValidationError(std::string(what) + ": missing field '" + field + "'");
  }
  return *it;
}

double number_field(const json& j, const char* field, const char* what) {
  const json& v = require_field(j, field, what);
  if (!v.is_number()) {
    throw ValidationError(std::string(what) + ": field '" + field +
                          "' must be a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ValidationError(std::string(what) + ": field '" + field +
                          "' must be finite");
  }
  return x;
}

std::size_t size_field(const json& j, const char* field, const char* what) {
  const json& v = require_field(j, field, what);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ValidationError(std::string(what) + ": field '" + field +
                          "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

std::size_t nonneg_field(const json& j, const char* field, const char* what) {
  const json& v = require_field(j, field, what);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ValidationError(std::string(what) + ": field '" + field +
                          "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> number_array_field(const json& j, const char* field,
                                       std::size_t expected, const char* what) {
  const json& v = require_field(j, field, what);
  if (!v.is_array() || v.size() != expected) {
    throw ValidationError(std::string(what) + ": field '" + field +
                          "' must be an array of " + std::to_string(expected) +
                          " numbers");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const json& e : v) {
    if (!e.is_number()) {
      throw ValidationError(std::string(what) + ": field '" + field +
                            "' must contain only numbers");
    }
    const double x = e.get<double>();
    if (!std::isfinite(x)) {
      throw ValidationError(std::string(what) + ": field '" + field +
                            "' contains a non-finite entry");
    }
    out.push_back(x);
  }
  return out;
}

} // namespace

void to_json(nlohmann::json& j, const ComplexMatrix& m) {
  std::vector<double> re, im;
  re.reserve(m.data().size());
  im.reserve(m.data().size());
  for (const cplx& v : m.data()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j = {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

void from_json(const nlohmann::json& j, ComplexMatrix& m) {
  const char* what = "matrix JSON";
  const std::size_t rows = size_field(j, "rows", what);
  const std::size_t cols = size_field(j, "cols", what);
  const std::vector<double> re = number_array_field(j, "re", rows * cols, what);
  const std::vector<double> im = number_array_field(j, "im", rows * cols, what);
  std::vector<cplx> entries(rows * cols);
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = {re[i], im[i]};
  m = ComplexMatrix(rows, cols, std::move(entries));
}

namespace synth {

void to_json(nlohmann::json& j, const CUParams& p) {
  j = {{"alpha", p.alpha}, {"theta", p.theta}, {"phi", p.phi}};
}

void from_json(const nlohmann::json& j, CUParams& p) {
  const char* what = "CUParams JSON";
  p.alpha = number_field(j, "alpha", what);
  p.theta = number_field(j, "theta", what);
  p.phi = number_field(j, "phi", what);
}

void to_json(nlohmann::json& j, const ZYZParams& z) {
  j = {{"gamma", z.gamma},
       {"omega", z.omega},
       {"delta", z.delta},
       {"global_phase", z.global_phase}};
}

void from_json(const nlohmann::json& j, ZYZParams& z) {
  const char* what = "ZYZParams JSON";
  z.gamma = number_field(j, "gamma", what);
  z.omega = number_field(j, "omega", what);
  z.delta = number_field(j, "delta", what);
  z.global_phase = j.contains("global_phase")
                       ? number_field(j, "global_phase", what)
                       : 0.0;
}

void to_json(nlohmann::json& j, const ControlledUPlan& plan) {
  j = {{"cu", plan.cu},
       {"control_phase", plan.control_phase},
       {"target_unitary", plan.target_unitary}};
}

void from_json(const nlohmann::json& j, ControlledUPlan& plan) {
  const char* what = "ControlledUPlan JSON";
  require_field(j, "cu", what).get_to(plan.cu);
  plan.control_phase = number_field(j, "control_phase", what);
  require_field(j, "target_unitary", what).get_to(plan.target_unitary);
}

} // namespace synth

namespace optics {

void to_json(nlohmann::json& j, const ModeTransfer& t) { j = t.matrix; }

void from_json(const nlohmann::json& j, ModeTransfer& t) { j.get_to(t.matrix); }

void to_json(nlohmann::json& j, const SuccessReport& r) {
  j = {{"phi", r.phi},
       {"p_succ", r.p_succ},
       {"residual", r.residual},
       {"transfer", r.transfer},
       {"restarts_used", r.restarts_used},
       {"seed", r.seed}};
}

void from_json(const nlohmann::json& j, SuccessReport& r) {
  const char* what = "SuccessReport JSON";
  r.phi = number_field(j, "phi", what);
  r.p_succ = number_field(j, "p_succ", what);
  r.residual = number_field(j, "residual", what);
  require_field(j, "transfer", what).get_to(r.transfer);
  r.restarts_used = static_cast<int>(size_field(j, "restarts_used", what));
  r.seed = require_field(j, "seed", what).get<std::uint64_t>();
}

} // namespace optics

namespace multictrl {

namespace {

constexpr const char* kSwapName = "controlled-level-swap";
constexpr const char* kPhaseName = "controlled-level-phase";
constexpr const char* kLocalName = "local-unitary-on-qubit-subspace";

} // namespace

void to_json(nlohmann::json& j, const GateOp& g) {
  nlohmann::json params;
  const char* kind = nullptr;
  switch (g.kind) {
  case GateKind::ControlledLevelSwap:
    kind = kSwapName;
    params = {{"a", g.level_a}, {"b", g.level_b}};
    break;
  case GateKind::ControlledLevelPhase:
    kind = kPhaseName;
    params = {{"level", g.level}, {"angle", g.angle}};
    break;
  case GateKind::LocalUnitary:
    kind = kLocalName;
    params = {{"v", g.local}};
    break;
  }
  j = {{"kind", kind}, {"params", params}};
  if (g.control) {
    j["control"] = *g.control;
  } else {
    j["control"] = nullptr;
  }
}

void from_json(const nlohmann::json& j, GateOp& g) {
  const char* what = "GateOp JSON";
  const json& kind = require_field(j, "kind", what);
  const json& params = require_field(j, "params", what);
  const json& control = require_field(j, "control", what);
  if (control.is_null()) {
    g.control.reset();
  } else if (control.is_number_integer() && control.get<long long>() >= 0) {
    g.control = control.get<std::size_t>();
  } else {
    throw ValidationError("GateOp JSON: field 'control' must be null or a "
                          "nonnegative integer");
  }
  const std::string name = kind.get<std::string>();
  if (name == kSwapName) {
    g.kind = GateKind::ControlledLevelSwap;
    g.level_a = nonneg_field(params, "a", what);
    g.level_b = nonneg_field(params, "b", what);
  } else if (name == kPhaseName) {
    g.kind = GateKind::ControlledLevelPhase;
    g.level = nonneg_field(params, "level", what);
    g.angle = number_field(params, "angle", what);
  } else if (name == kLocalName) {
    g.kind = GateKind::LocalUnitary;
    require_field(params, "v", what).get_to(g.local);
  } else {
    throw ValidationError("GateOp JSON: unknown kind '" + name + "'");
  }
}

void to_json(nlohmann::json& j, const QuditCircuit& c) {
  j = {{"n_controls", c.n_controls},
       {"target_levels", c.target_levels},
       {"gates", c.gates}};
}

void from_json(const nlohmann::json& j, QuditCircuit& c) {
  const char* what = "QuditCircuit JSON";
  c.n_controls = size_field(j, "n_controls", what);
  c.target_levels = size_field(j, "target_levels", what);
  const json& gates = require_field(j, "gates", what);
  if (!gates.is_array()) {
    throw ValidationError("QuditCircuit JSON: field 'gates' must be an array");
  }
  c.gates.clear();
  for (const json& g : gates) c.gates.push_back(g.get<GateOp>());
}

void to_json(nlohmann::json& j, const ResourceReport& r) {
  j = {{"n_controls", r.n_controls},
       {"two_qubit_gate_count", r.two_qubit_gate_count},
       {"cnot_equivalent_count", r.cnot_equivalent_count},
       {"cphase_count", r.cphase_count},
       {"success_probability_ours", r.success_probability_ours},
       {"success_probability_baseline", r.success_probability_baseline}};
}

} // namespace multictrl

namespace tomo {

void to_json(nlohmann::json& j, const ChoiMatrix& c) { j = c.matrix; }

void from_json(const nlohmann::json& j, ChoiMatrix& c) { j.get_to(c.matrix); }

void to_json(nlohmann::json& j, const Tomogram& t) {
  nlohmann::json configs = nlohmann::json::array();
  for (const auto& [in, meas] : t.configurations) {
    configs.push_back({in, meas});
  }
  j = {{"configurations", configs},
       {"counts", t.counts},
       {"shots_per_config", t.shots_per_config}};
  if (t.seed) {
    j["seed"] = *t.seed;
  } else {
    j["seed"] = nullptr;
  }
}

void from_json(const nlohmann::json& j, Tomogram& t) {
  const char* what = "Tomogram JSON";
  const json& configs = require_field(j, "configurations", what);
  if (!configs.is_array()) {
    throw ValidationError("Tomogram JSON: field 'configurations' must be an array");
  }
  t.configurations.clear();
  for (const json& c : configs) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      throw ValidationError(
          "Tomogram JSON: each configuration must be a [input, measurement] "
          "pair of state labels");
    }
    t.configurations.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  t.counts = number_array_field(j, "counts", t.configurations.size(), what);
  t.shots_per_config =
      static_cast<std::int64_t>(size_field(j, "shots_per_config", what));
  const json& seed = require_field(j, "seed", what);
  if (seed.is_null()) {
    t.seed.reset();
  } else {
    t.seed = seed.get<std::uint64_t>();
  }
}

} // namespace tomo

} // namespace qcu
