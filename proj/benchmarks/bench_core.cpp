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

#include <benchmark/benchmark.h>

#include <array>
#include <random>

#include "qcu/angles.hpp"
#include "qcu/matrix.hpp"
#include "qcu/multictrl.hpp"
#include "qcu/optics.hpp"
#include "qcu/synth.hpp"
#include "qcu/tomo.hpp"

namespace {

using qcu::ComplexMatrix;
using qcu::cplx;

ComplexMatrix random_square(std::mt19937& g, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (auto& v : m.data()) v = {d(g), d(g)};
  return m;
}

void BM_Permanent(benchmark::State& state) {
  std::mt19937 g(1);
  const auto m = random_square(g, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcu::permanent(m));
  }
}
BENCHMARK(BM_Permanent)->Arg(4)->Arg(8)->Arg(12);

void BM_ComposeW(benchmark::State& state) {
  const qcu::synth::CUParams p{0.3, 1.1, 2.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcu::synth::compose_w(p));
  }
}
BENCHMARK(BM_ComposeW);

void BM_CuToZyz(benchmark::State& state) {
  const qcu::synth::CUParams p{0.3, 1.1, 2.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcu::synth::cu_to_zyz(p));
  }
}
BENCHMARK(BM_CuToZyz);

void BM_SynthesizeControlledU(benchmark::State& state) {
  std::mt19937 g(2);
  const auto u = [&] {
    auto m = qcu::synth::rot_z(0.4) * qcu::synth::rot_y(1.2) * qcu::synth::rot_z(-0.8);
    return m;
  }();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcu::synth::synthesize_controlled_u(u));
  }
}
BENCHMARK(BM_SynthesizeControlledU);

void BM_PostselectedMap(benchmark::State& state) {
  std::array<double, 36> x;
  std::mt19937 g(3);
  std::uniform_real_distribution<double> d(-qcu::kPi, qcu::kPi);
  for (auto& v : x) v = d(g);
  const auto t = qcu::optics::detail::transfer_from_params(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcu::optics::postselected_map(t));
  }
}
BENCHMARK(BM_PostselectedMap);

void BM_CPhaseObjective(benchmark::State& state) {
  std::array<double, 36> x;
  std::mt19937 g(4);
  std::uniform_real_distribution<double> d(-qcu::kPi, qcu::kPi);
  for (auto& v : x) v = d(g);
  std::array<cplx, 16> t;
  for (auto _ : state) {
    qcu::optics::detail::build_transfer(x, t);
    benchmark::DoNotOptimize(qcu::optics::detail::eval_transfer(t, qcu::kPi));
    x[0] += 1e-9;
  }
}
BENCHMARK(BM_CPhaseObjective);

void BM_OptimizeSingleRestart(benchmark::State& state) {
  qcu::optics::OptimizeOptions opts;
  opts.restarts = 1;
  opts.seed = 12;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcu::optics::optimize_cphase(qcu::kPi, opts));
  }
}
BENCHMARK(BM_OptimizeSingleRestart)->Unit(benchmark::kMillisecond);

void BM_SimulateNcu(benchmark::State& state) {
  const auto c = qcu::multictrl::build_ncu(
      static_cast<std::size_t>(state.range(0)), 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcu::multictrl::simulate_circuit(c));
  }
}
BENCHMARK(BM_SimulateNcu)->Arg(2)->Arg(3)->Arg(5);

void BM_ReconstructML(benchmark::State& state) {
  const auto u = qcu::synth::rot_y(0.9);
  const auto t = qcu::tomo::simulate_tomography(u, 10000,
                                                qcu::tomo::NoiseModel::poisson(), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcu::tomo::reconstruct_ml(t));
  }
}
BENCHMARK(BM_ReconstructML)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
