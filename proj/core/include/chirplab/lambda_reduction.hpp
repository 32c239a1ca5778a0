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

#include <vector>

#include "chirplab/model.hpp"
#include "chirplab/propagator.hpp"

// The three-level Lambda approximation: the symmetric/antisymmetric excited
// combination a+- = (a3 +- a4)/sqrt(2), validity diagnostics, and a
// quantitative four-level vs three-level comparison. Both require zero
// one-photon detuning.

namespace chirplab {

// Unitary change of basis (a1, a2, a3, a4) -> (a1, a2, a+, a-).
State to_pm_basis(const State& state4);

// Inverse of to_pm_basis.
State from_pm_basis(const State& state_pm);

// Max over time of | |a-(t)| - |a-(t0)| | along the four-level trajectory
// from bare state 1 over the default window. Small drift certifies dropping
// a- from the dynamics. Throws std::domain_error when detuning != 0.
double aminus_drift(const PulseParams& pulse, const AtomSystem& atom);

struct ReductionReport {
  bool validity_chirp = false;  // |chirp| * tau0 > omega43
  double chirp_value = 0.0;     // |chirp| * tau0, GHz
  double chirp_bound = 0.0;     // omega43, GHz
  bool validity_rabi = false;   // peak_rabi > omega43
  double rabi_value = 0.0;      // peak_rabi, GHz
  double rabi_bound = 0.0;      // omega43, GHz
  double aminus_drift = 0.0;
  // Max over matched samples of {|dP1|, |dP2|, |P3+P4 - P3'|} between the
  // four-level model and the three-level approximation.
  double population_gap = 0.0;
  // population_gap within the agreement threshold passed to compare_models.
  bool qualitative_match = false;
  Eigen::VectorXd final_four;    // 4 entries
  Eigen::VectorXd final_three;   // 3 entries
  std::vector<double> times;     // shared sample grid
  std::vector<Eigen::VectorXd> pops_four;
  std::vector<Eigen::VectorXd> pops_three;
};

// Propagate both models from bare state 1 on a shared uniform grid over the
// default window and report validity inequalities, a- drift, and the
// population gap. Throws std::domain_error when detuning != 0.
ReductionReport compare_models(const PulseParams& pulse, const AtomSystem& atom,
                               double agreement_threshold = 0.05);

}  // namespace chirplab
