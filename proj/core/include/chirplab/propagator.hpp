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

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chirplab/model.hpp"

// Norm-preserving integration of i dC/dt = H(t) C with an adaptive embedded
// Runge-Kutta 5(4) pair (Dormand-Prince) and dense output. The state is
// never renormalized after a step; norm drift stays visible as a diagnostic.

namespace chirplab {

using HBuilder = std::function<Matrix(double)>;

struct IntegrationSettings {
  double t_start = 0.0;     // ns
  double t_end = 1.0;       // ns
  double max_step = 1e-3;   // ns, > 0
  double tolerance = 1e-10; // local error target, > 0
  int record_stride = 1;    // keep every n-th accepted step
};

void validate(const IntegrationSettings& settings);

// Time grid with complex amplitudes and their populations |c_i|^2.
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<Eigen::VectorXd> populations;

  std::size_t size() const { return times.size(); }
};

// Raised when the adaptive step size underflows (stiffness) or the stepper
// cannot satisfy the local error target; carries the failing time.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& message, double t)
      : std::runtime_error(message), time_(t) {}
  double time() const { return time_; }

 private:
  double time_;
};

// Default integration window for a pulse: center +/- 5 sqrt(2) tau0, where
// the envelope has fallen to e^-25 < 2e-11 of its peak. max_step = tau0/4000,
// tolerance 1e-10, record_stride chosen so roughly 2000 samples are kept.
IntegrationSettings default_window(const PulseParams& pulse);

// Integrate i dC/dt = H(t) C from settings.t_start to settings.t_end.
// Samples are the initial point plus every record_stride-th accepted step and
// the final point. The initial state must be normalized within 1e-8.
Trajectory propagate(const HBuilder& hbuilder, const State& initial,
                     const IntegrationSettings& settings);

// Same integration, but sampled at the given strictly increasing times
// (all inside [t_start, t_end]) through the stepper's dense output.
Trajectory propagate_sampled(const HBuilder& hbuilder, const State& initial,
                             const IntegrationSettings& settings,
                             const std::vector<double>& sample_times);

// Populations at the last sample. Throws std::invalid_argument when empty.
Eigen::VectorXd final_populations(const Trajectory& traj);

// Max over samples of the summed populations of the given state indices.
// Throws std::out_of_range on an invalid index.
double transient_max(const Trajectory& traj, const std::vector<int>& states);

}  // namespace chirplab
