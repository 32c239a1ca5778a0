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

#include "chirplab/lambda_reduction.hpp"

#include <cmath>
#include <stdexcept>

namespace chirplab {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_zero_detuning(const PulseParams& pulse) {
  if (pulse.detuning != 0.0) {
    throw std::domain_error(
        "the Lambda reduction requires zero one-photon detuning");
  }
}

double aminus_drift_from(const Trajectory& traj) {
  const auto aminus = [](const State& s) {
    return std::abs(kInvSqrt2 * (s[2] - s[3]));
  };
  const double base = aminus(traj.states.front());
  double drift = 0.0;
  for (const State& s : traj.states) {
    drift = std::max(drift, std::abs(aminus(s) - base));
  }
  return drift;
}

}  // namespace

State to_pm_basis(const State& state4) {
  if (state4.size() != 4) {
    throw std::invalid_argument("expected a 4-component state");
  }
  State out(4);
  out[0] = state4[0];
  out[1] = state4[1];
  out[2] = kInvSqrt2 * (state4[2] + state4[3]);
  out[3] = kInvSqrt2 * (state4[2] - state4[3]);
  return out;
}

State from_pm_basis(const State& state_pm) {
  if (state_pm.size() != 4) {
    throw std::invalid_argument("expected a 4-component state");
  }
  State out(4);
  out[0] = state_pm[0];
  out[1] = state_pm[1];
  out[2] = kInvSqrt2 * (state_pm[2] + state_pm[3]);
  out[3] = kInvSqrt2 * (state_pm[2] - state_pm[3]);
  return out;
}

double aminus_drift(const PulseParams& pulse, const AtomSystem& atom) {
  require_zero_detuning(pulse);
  validate(pulse);
  validate(atom);

  State initial = State::Zero(4);
  initial[0] = 1.0;
  const auto builder = [&](double t) { return hamiltonian4(t, pulse, atom); };
  return aminus_drift_from(propagate(builder, initial, default_window(pulse)));
}

ReductionReport compare_models(const PulseParams& pulse, const AtomSystem& atom,
                               double agreement_threshold) {
  require_zero_detuning(pulse);
  validate(pulse);
  validate(atom);
  if (!(agreement_threshold > 0.0)) {
    throw std::invalid_argument("agreement_threshold must be > 0");
  }

  const IntegrationSettings settings = default_window(pulse);
  constexpr std::size_t kSamples = 2001;
  std::vector<double> grid(kSamples);
  const double span = settings.t_end - settings.t_start;
  for (std::size_t i = 0; i < kSamples; ++i) {
    grid[i] = settings.t_start + span * double(i) / double(kSamples - 1);
  }
  grid.back() = settings.t_end;

  State init4 = State::Zero(4);
  init4[0] = 1.0;
  State init3 = State::Zero(3);
  init3[0] = 1.0;

  const Trajectory traj4 = propagate_sampled(
      [&](double t) { return hamiltonian4(t, pulse, atom); }, init4, settings,
      grid);
  const Trajectory traj3 = propagate_sampled(
      [&](double t) { return hamiltonian3(t, pulse, atom); }, init3, settings,
      grid);

  ReductionReport report;
  report.chirp_value = std::abs(pulse.chirp_rate) * tau0(pulse);
  report.chirp_bound = atom.omega43;
  report.validity_chirp = report.chirp_value > report.chirp_bound;
  report.rabi_value = pulse.peak_rabi;
  report.rabi_bound = atom.omega43;
  report.validity_rabi = report.rabi_value > report.rabi_bound;
  report.aminus_drift = aminus_drift_from(traj4);

  double gap = 0.0;
  for (std::size_t k = 0; k < kSamples; ++k) {
    const Eigen::VectorXd& p4 = traj4.populations[k];
    const Eigen::VectorXd& p3 = traj3.populations[k];
    gap = std::max(gap, std::abs(p4[0] - p3[0]));
    gap = std::max(gap, std::abs(p4[1] - p3[1]));
    gap = std::max(gap, std::abs(p4[2] + p4[3] - p3[2]));
  }
  report.population_gap = gap;
  report.qualitative_match = gap <= agreement_threshold;
  report.final_four = traj4.populations.back();
  report.final_three = traj3.populations.back();
  report.times = grid;
  report.pops_four = traj4.populations;
  report.pops_three = traj3.populations;
  return report;
}

}  // namespace chirplab
