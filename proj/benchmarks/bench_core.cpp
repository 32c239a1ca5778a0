// Copyright 2026 The chirplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "chirplab/dressed.hpp"
#include "chirplab/model.hpp"
#include "chirplab/propagator.hpp"
#include "chirplab/sweep.hpp"

namespace {

using namespace chirplab;

PulseParams reference_pulse() {
  PulseParams p;
  p.peak_rabi = 3.035;
  p.fwhm = 2.995;
  p.chirp_rate = -2.947;
  return p;
}

HBuilder reference_builder() {
  const PulseParams pulse = reference_pulse();
  const AtomSystem atom = rb85_d1_preset();
  return [pulse, atom](double t) { return hamiltonian4(t, pulse, atom); };
}

State ground4() {
  State s = State::Zero(4);
  s[0] = 1.0;
  return s;
}

std::vector<double> frame_grid(std::size_t n) {
  const IntegrationSettings s = default_window(reference_pulse());
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = s.t_start + (s.t_end - s.t_start) * double(i) / double(n - 1);
  }
  grid.back() = s.t_end;
  return grid;
}

void BM_Hamiltonian4(benchmark::State& state) {
  const PulseParams pulse = reference_pulse();
  const AtomSystem atom = rb85_d1_preset();
  double t = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamiltonian4(t, pulse, atom));
    t += 1e-6;
  }
}
BENCHMARK(BM_Hamiltonian4);

void BM_PropagateReference(benchmark::State& state) {
  const HBuilder h = reference_builder();
  const IntegrationSettings s = default_window(reference_pulse());
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(h, ground4(), s));
  }
}
BENCHMARK(BM_PropagateReference)->Unit(benchmark::kMillisecond);

void BM_DressedFrame(benchmark::State& state) {
  const HBuilder h = reference_builder();
  const auto grid = frame_grid(std::size_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dressed_frame(h, grid));
  }
}
BENCHMARK(BM_DressedFrame)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_DressedRoute(benchmark::State& state) {
  const HBuilder h = reference_builder();
  const DressedFrame frame = dressed_frame(h, frame_grid(2001));
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate_dressed(frame, ground4()));
  }
}
BENCHMARK(BM_DressedRoute)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  SweepSpec spec;
  spec.fwhm_axis = {2.5, 3.0, 3.5, 4.0};
  spec.chirp_axis = {-4.0, -3.0, -2.0};
  spec.atom = rb85_d1_preset();
  const int threads = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(spec, threads));
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
