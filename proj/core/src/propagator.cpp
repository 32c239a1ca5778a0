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

#include "chirplab/propagator.hpp"

#include <cmath>
#include <stdexcept>

#include "rk_dopri5.hpp"

namespace chirplab {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

void check_initial(const State& initial) {
  if (initial.size() == 0) {
    throw std::invalid_argument("initial state is empty");
  }
  if (std::abs(initial.squaredNorm() - 1.0) > 1e-8) {
    throw std::invalid_argument("initial state is not normalized");
  }
}

void check_dimensions(const HBuilder& hbuilder, double t, Eigen::Index dim) {
  const Matrix h = hbuilder(t);
  if (h.rows() != dim || h.cols() != dim) {
    throw std::invalid_argument("hamiltonian dimension does not match state");
  }
}

// i dC/dt = H(t) C  =>  dC/dt = -i H(t) C.
auto schrodinger_rhs(const HBuilder& hbuilder) {
  return [&hbuilder](double t, const State& y, State& dydt) {
    dydt.noalias() = hbuilder(t) * y;
    dydt *= kMinusI;
  };
}

void fill_populations(Trajectory& traj) {
  traj.populations.reserve(traj.states.size());
  for (const State& s : traj.states) {
    traj.populations.push_back(s.cwiseAbs2());
  }
}

}  // namespace

void validate(const IntegrationSettings& settings) {
  if (!(settings.t_start < settings.t_end)) {
    throw std::invalid_argument("settings: t_start must precede t_end");
  }
  if (!(settings.max_step > 0.0) || !std::isfinite(settings.max_step)) {
    throw std::invalid_argument("settings: max_step must be > 0");
  }
  if (!(settings.tolerance > 0.0) || !std::isfinite(settings.tolerance)) {
    throw std::invalid_argument("settings: tolerance must be > 0");
  }
  if (settings.record_stride < 1) {
    throw std::invalid_argument("settings: record_stride must be >= 1");
  }
}

IntegrationSettings default_window(const PulseParams& pulse) {
  validate(pulse);
  const double t0 = tau0(pulse);
  const double half = 5.0 * std::sqrt(2.0) * t0;

  IntegrationSettings s;
  s.t_start = pulse.center - half;
  s.t_end = pulse.center + half;
  // The cap, not the error target, limits the step here; tau0/4000 keeps the
  // per-step phase small enough that population drift on a dark pulse and
  // under a global energy shift stays below 1e-9 across the whole window.
  s.max_step = t0 / 4000.0;
  s.tolerance = 1e-10;
  const double expected_steps = (s.t_end - s.t_start) / s.max_step;
  s.record_stride = std::max(1, int(std::lround(expected_steps / 2000.0)));
  return s;
}

Trajectory propagate(const HBuilder& hbuilder, const State& initial,
                     const IntegrationSettings& settings) {
  validate(settings);
  check_initial(initial);
  check_dimensions(hbuilder, settings.t_start, initial.size());

  Trajectory traj;
  traj.times.push_back(settings.t_start);
  traj.states.push_back(initial);

  std::size_t accepted = 0;
  double t_last = settings.t_start;
  State y_last = initial;

  detail::dopri5(schrodinger_rhs(hbuilder), initial, settings.t_start,
                 settings.t_end, settings.tolerance, settings.tolerance,
                 settings.max_step,
                 [&](const detail::DenseSegment&, const State& y, double t) {
                   ++accepted;
                   if (accepted % std::size_t(settings.record_stride) == 0) {
                     traj.times.push_back(t);
                     traj.states.push_back(y);
                   }
                   t_last = t;
                   y_last = y;
                 });

  if (traj.times.back() != t_last) {
    traj.times.push_back(t_last);
    traj.states.push_back(y_last);
  }
  fill_populations(traj);
  return traj;
}

Trajectory propagate_sampled(const HBuilder& hbuilder, const State& initial,
                             const IntegrationSettings& settings,
                             const std::vector<double>& sample_times) {
  validate(settings);
  check_initial(initial);
  check_dimensions(hbuilder, settings.t_start, initial.size());
  if (sample_times.empty()) {
    throw std::invalid_argument("sample_times is empty");
  }
  const double slack =
      1e-12 * std::max(1.0, settings.t_end - settings.t_start);
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    if (i > 0 && !(sample_times[i] > sample_times[i - 1])) {
      throw std::invalid_argument("sample_times must be strictly increasing");
    }
    if (sample_times[i] < settings.t_start - slack ||
        sample_times[i] > settings.t_end + slack) {
      throw std::invalid_argument("sample_times outside integration window");
    }
  }

  Trajectory traj;
  traj.times = sample_times;
  traj.states = detail::integrate_sampled(
      schrodinger_rhs(hbuilder), initial, settings.t_start, settings.t_end,
      settings.tolerance, settings.tolerance, settings.max_step, sample_times);
  fill_populations(traj);
  return traj;
}

Eigen::VectorXd final_populations(const Trajectory& traj) {
  if (traj.populations.empty()) {
    throw std::invalid_argument("trajectory is empty");
  }
  return traj.populations.back();
}

double transient_max(const Trajectory& traj, const std::vector<int>& states) {
  if (traj.populations.empty()) {
    throw std::invalid_argument("trajectory is empty");
  }
  const int dim = int(traj.populations.front().size());
  for (int idx : states) {
    if (idx < 0 || idx >= dim) {
      throw std::out_of_range("state index outside the system dimension");
    }
  }
  double best = 0.0;
  for (const Eigen::VectorXd& p : traj.populations) {
    double sum = 0.0;
    for (int idx : states) sum += p[idx];
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace chirplab
