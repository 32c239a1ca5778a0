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

#include <cstdint>
#include <string>
#include <vector>

#include "chirplab/model.hpp"

// Two-dimensional (fwhm, chirp_rate) scans of end-of-pulse populations with
// analytic adiabaticity flags per cell. Cells are independent work items;
// the result is assembled by cell index so output never depends on worker
// count or scheduling.

namespace chirplab {

enum class ModelKind { four_level, three_level };

struct SweepSpec {
  std::vector<double> fwhm_axis;   // ns, strictly monotone
  std::vector<double> chirp_axis;  // GHz/ns, strictly monotone
  double peak_rabi = 3.035;        // GHz
  double detuning = 0.0;           // GHz
  AtomSystem atom;
  ModelKind model = ModelKind::four_level;
};

void validate(const SweepSpec& spec);

// One grid cell. A failed cell carries NaN populations and the integrator
// message; failures are data and never abort the grid.
struct SweepCell {
  Eigen::VectorXd final_pops;
  bool condition_sweep = false;
  bool condition_lz = false;
  bool failed = false;
  std::string error;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepCell> cells;  // row-major: [fwhm index][chirp index]

  const SweepCell& at(std::size_t fwhm_idx, std::size_t chirp_idx) const {
    return cells.at(fwhm_idx * spec.chirp_axis.size() + chirp_idx);
  }
  std::size_t n_failed() const;
};

// Evaluate every cell: build the pulse, propagate from bare state 1 over the
// default window, record final populations and the analytic flags.
// threads <= 0 selects the hardware concurrency.
SweepResult run_sweep(const SweepSpec& spec, int threads = 1);

// Empirical inversion map (final P2 >= threshold per cell, row-major) plus
// the agreement rate against the analytic condition flags over non-failed
// cells. threshold must lie in (0, 1).
struct RegionMap {
  std::vector<std::uint8_t> inverted;
  double agreement = 0.0;
};

RegionMap classify_region(const SweepResult& result, double threshold);

}  // namespace chirplab
