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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qcu/angles.hpp"
#include "qcu/errors.hpp"
#include "qcu/json_io.hpp"
#include "qcu/matrix.hpp"
#include "qcu/multictrl.hpp"
#include "qcu/optics.hpp"
#include "qcu/synth.hpp"
#include "qcu/tomo.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct OutputOptions {
  std::string path; // empty = stdout
  bool pretty = false;
};

void emit_text(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out.path);
    if (!f) throw qcu::ValidationError("cannot open output file '" + out.path + "'");
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
  }
}

void emit_json(const OutputOptions& out, const json& j) {
  emit_text(out, out.pretty ? j.dump(2) : j.dump());
}

/// Matrix arguments accept "@file.json" or inline JSON text.
qcu::ComplexMatrix load_matrix(const std::string& arg) {
  std::string text;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) {
      throw qcu::ValidationError("cannot open matrix file '" + arg.substr(1) + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    text = arg;
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw qcu::ValidationError(std::string("matrix JSON: parse error: ") + e.what());
  }
  return j.get<qcu::ComplexMatrix>();
}

double to_radians(double value, bool deg) { return deg ? value * qcu::kPi / 180.0 : value; }

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.path, "Write output to a file instead of stdout");
  cmd->add_flag("--pretty", out.pretty, "Indent JSON output");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcu: controlled-unitary synthesis, linear-optical c-phase "
               "optimization, qudit-assisted multi-controlled circuits, and "
               "synthetic process tomography"};
  app.require_subcommand(1);

  OutputOptions out;
  bool deg = false;

  // decompose
  std::string arg_unitary;
  auto* cmd_decompose =
      app.add_subcommand("decompose", "ZYZ-decompose a 2x2 unitary");
  cmd_decompose->add_option("--unitary", arg_unitary, "@file.json or inline JSON")
      ->required();
  add_output_flags(cmd_decompose, out);

  // map
  double opt_phi = 0.0, opt_theta = 0.0, opt_alpha = 0.0;
  auto* cmd_map = app.add_subcommand(
      "map", "Map scheme parameters {alpha, theta, phi} to ZYZ angles");
  cmd_map->add_option("--phi", opt_phi, "Conditional phase")->required();
  cmd_map->add_option("--theta", opt_theta, "Y-rotation angle")->required();
  cmd_map->add_option("--alpha", opt_alpha, "Z-rotation angle")->required();
  cmd_map->add_flag("--deg", deg, "Angles given in degrees");
  add_output_flags(cmd_map, out);

  // inverse-map
  double opt_omega = 0.0, opt_gamma = 0.0, opt_delta = 0.0, opt_gphase = 0.0;
  auto* cmd_inverse = app.add_subcommand(
      "inverse-map", "Map ZYZ angles back to scheme parameters");
  cmd_inverse->add_option("--omega", opt_omega)->required();
  cmd_inverse->add_option("--gamma", opt_gamma)->required();
  cmd_inverse->add_option("--delta", opt_delta)->required();
  cmd_inverse->add_option("--global-phase", opt_gphase,
                          "Must be zero; the scheme realizes determinant-one "
                          "operations");
  cmd_inverse->add_flag("--deg", deg, "Angles given in degrees");
  add_output_flags(cmd_inverse, out);

  // assemble
  auto* cmd_assemble = app.add_subcommand(
      "assemble", "Synthesize a controlled-U plan and emit the 4x4 gate");
  cmd_assemble->add_option("--unitary", arg_unitary, "@file.json or inline JSON")
      ->required();
  add_output_flags(cmd_assemble, out);

  // optimize
  qcu::optics::OptimizeOptions opt_opts;
  auto* cmd_optimize = app.add_subcommand(
      "optimize", "Recover the optimal c-phase success probability at one phase");
  cmd_optimize->add_option("--phi", opt_phi, "Conditional phase")->required();
  cmd_optimize->add_option("--restarts", opt_opts.restarts, "Random restarts");
  cmd_optimize->add_option("--seed", opt_opts.seed, "Deterministic seed (default 0)");
  cmd_optimize->add_option("--max-iter", opt_opts.max_iter,
                           "Objective evaluations per restart");
  cmd_optimize->add_option("--penalty", opt_opts.penalty, "Base penalty weight");
  cmd_optimize->add_option("--threads", opt_opts.threads,
                           "Worker threads (0 = hardware)");
  cmd_optimize->add_flag("--deg", deg, "Angles given in degrees");
  add_output_flags(cmd_optimize, out);

  // curve
  int curve_points = 64;
  std::vector<double> curve_phis;
  auto* cmd_curve = app.add_subcommand(
      "curve", "Success-probability curve over a phase grid (CSV)");
  cmd_curve->add_option("--points", curve_points,
                        "Interior grid points on (0, 2*pi)");
  cmd_curve->add_option("--phi", curve_phis,
                        "Explicit grid point (repeatable, overrides --points)");
  cmd_curve->add_option("--restarts", opt_opts.restarts, "Random restarts");
  cmd_curve->add_option("--seed", opt_opts.seed, "Deterministic seed (default 0)");
  cmd_curve->add_option("--max-iter", opt_opts.max_iter,
                        "Objective evaluations per restart");
  cmd_curve->add_option("--penalty", opt_opts.penalty, "Base penalty weight");
  cmd_curve->add_option("--threads", opt_opts.threads,
                        "Worker threads (0 = hardware)");
  cmd_curve->add_flag("--deg", deg, "Angles given in degrees");
  add_output_flags(cmd_curve, out);

  // ncu
  std::size_t ncu_n = 1;
  double ncu_theta = 0.0;
  std::string arg_v;
  bool ncu_verify = false;
  auto* cmd_ncu = app.add_subcommand(
      "ncu", "Build (and optionally verify) the n-controlled-U qudit circuit");
  cmd_ncu->add_option("--n", ncu_n, "Number of control qubits")->required();
  cmd_ncu->add_option("--theta", ncu_theta, "Conditional phase")->required();
  cmd_ncu->add_option("--v", arg_v, "Local basis change (@file.json)");
  cmd_ncu->add_flag("--verify", ncu_verify,
                    "Simulate and compare against the ideal controlled gate");
  cmd_ncu->add_flag("--deg", deg, "Angles given in degrees");
  add_output_flags(cmd_ncu, out);

  // resources
  std::size_t res_n = 1;
  double res_pcnot = 1.0 / 9.0, res_pcphase = 0.111;
  auto* cmd_res = app.add_subcommand(
      "resources", "Gate counts and success probabilities vs the CNOT baseline");
  cmd_res->add_option("--n", res_n, "Number of control qubits")->required();
  cmd_res->add_option("--phi", opt_phi, "Conditional phase of the c-phase gate")
      ->required();
  cmd_res->add_option("--p-cnot", res_pcnot, "Per-CNOT success probability");
  cmd_res->add_option("--p-cphase", res_pcphase, "C-phase success probability");
  cmd_res->add_flag("--deg", deg, "Angles given in degrees");
  add_output_flags(cmd_res, out);

  // tomo
  std::int64_t tomo_shots = 10000;
  std::string tomo_noise = "none";
  double tomo_strength = 0.0;
  std::uint64_t tomo_seed = 0;
  std::string tomo_emit = "all";
  auto* cmd_tomo = app.add_subcommand(
      "tomo", "Simulate six-state process tomography and reconstruct the Choi "
              "matrix");
  cmd_tomo->add_option("--unitary", arg_unitary, "@file.json or inline JSON")
      ->required();
  cmd_tomo->add_option("--shots", tomo_shots, "Shots per configuration");
  cmd_tomo->add_option("--noise", tomo_noise, "none | poisson | depolarizing")
      ->check(CLI::IsMember({"none", "poisson", "depolarizing"}));
  cmd_tomo->add_option("--strength", tomo_strength, "Depolarizing strength");
  cmd_tomo->add_option("--seed", tomo_seed, "Deterministic seed (default 0)");
  cmd_tomo->add_option("--emit", tomo_emit, "all | tomogram | choi | scores")
      ->check(CLI::IsMember({"all", "tomogram", "choi", "scores"}));
  add_output_flags(cmd_tomo, out);

  // table
  std::string arg_rows;
  qcu::tomo::TableOptions table_opts;
  std::string table_noise = "none";
  double table_strength = 0.0;
  auto* cmd_table = app.add_subcommand(
      "table", "Synthetic result table over parameter rows (CSV)");
  cmd_table->add_option("--rows", arg_rows,
                        "@file.json with an array of {alpha, theta, phi} rows "
                        "(default: the six demonstration settings)");
  cmd_table->add_option("--shots", table_opts.shots, "Shots per configuration");
  cmd_table->add_option("--noise", table_noise, "none | poisson | depolarizing")
      ->check(CLI::IsMember({"none", "poisson", "depolarizing"}));
  cmd_table->add_option("--strength", table_strength, "Depolarizing strength");
  cmd_table->add_option("--seed", table_opts.seed, "Deterministic seed (default 0)");
  cmd_table->add_option("--restarts", table_opts.optimize.restarts,
                        "Optimizer restarts for the p_succ column");
  cmd_table->add_option("--threads", table_opts.optimize.threads,
                        "Optimizer worker threads (0 = hardware)");
  add_output_flags(cmd_table, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (cmd_decompose->parsed()) {
      const auto z = qcu::synth::zyz_decompose(load_matrix(arg_unitary));
      emit_json(out, json(z));
    } else if (cmd_map->parsed()) {
      const qcu::synth::CUParams p{to_radians(opt_alpha, deg),
                                   to_radians(opt_theta, deg),
                                   to_radians(opt_phi, deg)};
      emit_json(out, json(qcu::synth::cu_to_zyz(p)));
    } else if (cmd_inverse->parsed()) {
      const qcu::synth::ZYZParams z{to_radians(opt_gamma, deg),
                                    to_radians(opt_omega, deg),
                                    to_radians(opt_delta, deg),
                                    to_radians(opt_gphase, deg)};
      emit_json(out, json(qcu::synth::zyz_to_cu(z)));
    } else if (cmd_assemble->parsed()) {
      const auto plan = qcu::synth::synthesize_controlled_u(load_matrix(arg_unitary));
      json j = {{"plan", plan}, {"gate", qcu::synth::assemble_plan(plan)}};
      emit_json(out, j);
    } else if (cmd_optimize->parsed()) {
      const auto report =
          qcu::optics::optimize_cphase(to_radians(opt_phi, deg), opt_opts);
      emit_json(out, json(report));
    } else if (cmd_curve->parsed()) {
      std::vector<double> grid;
      if (!curve_phis.empty()) {
        grid.reserve(curve_phis.size());
        for (double phi : curve_phis) grid.push_back(to_radians(phi, deg));
      } else {
        grid = qcu::optics::uniform_phi_grid(curve_points);
      }
      const auto curve = qcu::optics::success_curve(grid, opt_opts);
      std::ostringstream csv;
      qcu::optics::write_curve_csv(csv, curve);
      emit_text(out, csv.str());
    } else if (cmd_ncu->parsed()) {
      std::optional<qcu::ComplexMatrix> v;
      if (!arg_v.empty()) v = load_matrix(arg_v);
      const auto circuit =
          qcu::multictrl::build_ncu(ncu_n, to_radians(ncu_theta, deg), v);
      if (ncu_verify) {
        const auto rep =
            qcu::multictrl::verify_ncu(circuit, ncu_n, to_radians(ncu_theta, deg), v);
        emit_json(out, json{{"circuit", circuit},
                            {"deviation", rep.deviation},
                            {"leakage", rep.leakage}});
      } else {
        emit_json(out, json(circuit));
      }
    } else if (cmd_res->parsed()) {
      const auto rep = qcu::multictrl::resource_report(
          res_n, to_radians(opt_phi, deg), res_pcnot, res_pcphase);
      json j = rep;
      j["phi"] = to_radians(opt_phi, deg);
      emit_json(out, j);
    } else if (cmd_tomo->parsed()) {
      const auto u = load_matrix(arg_unitary);
      qcu::tomo::NoiseModel noise;
      if (tomo_noise == "poisson") noise = qcu::tomo::NoiseModel::poisson();
      if (tomo_noise == "depolarizing") {
        noise = qcu::tomo::NoiseModel::depolarizing(tomo_strength);
      }
      const auto tomogram =
          qcu::tomo::simulate_tomography(u, tomo_shots, noise, tomo_seed);
      const auto choi = qcu::tomo::reconstruct_ml(tomogram);
      const auto ideal = qcu::tomo::choi_of_unitary(u);
      json j;
      if (tomo_emit == "tomogram") {
        j = tomogram;
      } else if (tomo_emit == "choi") {
        j = choi;
      } else {
        json scores = {{"fidelity", qcu::tomo::process_fidelity(choi, ideal)},
                       {"purity", qcu::tomo::purity(choi)}};
        if (tomo_emit == "scores") {
          j = scores;
        } else {
          j = {{"tomogram", tomogram}, {"choi", choi}, {"scores", scores}};
        }
      }
      emit_json(out, j);
    } else if (cmd_table->parsed()) {
      if (table_noise == "poisson") {
        table_opts.noise = qcu::tomo::NoiseModel::poisson();
      } else if (table_noise == "depolarizing") {
        table_opts.noise = qcu::tomo::NoiseModel::depolarizing(table_strength);
      }
      std::vector<qcu::synth::CUParams> rows;
      if (arg_rows.empty()) {
        rows = qcu::tomo::demo_settings();
      } else {
        std::string text = arg_rows;
        if (text.front() == '@') {
          std::ifstream f(text.substr(1));
          if (!f) {
            throw qcu::ValidationError("cannot open rows file '" +
                                       text.substr(1) + "'");
          }
          std::ostringstream ss;
          ss << f.rdbuf();
          text = ss.str();
        }
        const json j = json::parse(text);
        if (!j.is_array()) {
          throw qcu::ValidationError("rows JSON: expected an array of "
                                     "{alpha, theta, phi} objects");
        }
        for (const json& r : j) rows.push_back(r.get<qcu::synth::CUParams>());
      }
      const auto report = qcu::tomo::table_report(rows, table_opts);
      std::ostringstream csv;
      qcu::tomo::write_table_csv(csv, report);
      emit_text(out, csv.str());
    }
  } catch (const qcu::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const qcu::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
