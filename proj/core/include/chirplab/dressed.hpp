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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chirplab/model.hpp"
#include "chirplab/propagator.hpp"

// Continuity-tracked instantaneous eigendecomposition of H(t): dressed-state
// energies, gauge-fixed transformation matrices, the nonadiabatic coupling
// generator, dressed-frame propagation, and adiabaticity metrics.

namespace chirplab {

// Per-sample eigensystem of H(t) on a fixed grid.
//   energies[k]   : eigenvalues in tracked order (rad/ns),
//   transforms[k] : columns are the gauge-fixed eigenvectors,
//   couplings[k]  : K = T^dagger dT/dt (1/ns), antihermitian.
// Ordering is by ascending eigenvalue at the first sample, then by overlap
// continuity; each eigenvector's largest component is made real positive at
// the first sample, and the phase follows the previous sample afterwards.
struct DressedFrame {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> energies;
  std::vector<Matrix> transforms;
  std::vector<Matrix> couplings;

  int dim() const { return energies.empty() ? 0 : int(energies.front().size()); }
  std::size_t size() const { return times.size(); }
};

// Raised on degenerate eigenvalues at the first sample (ordering undefined)
// or when continuity tracking loses a state (best overlap below 0.5).
class TrackingError : public std::runtime_error {
 public:
  TrackingError(const std::string& message, double t)
      : std::runtime_error(message), time_(t) {}
  double time() const { return time_; }

 private:
  double time_;
};

// Diagonalize H on the grid (>= 3 strictly increasing samples). K is built
// by central finite differences of T (one-sided at the ends) and projected
// onto its antihermitian part, removing the symmetric O(h^2) stencil error.
DressedFrame dressed_frame(const HBuilder& hbuilder,
                           const std::vector<double>& times);

// Per-sample matrix of squared transform entries T_ij^2: row i is the bare
// state, column j the dressed state; every column sums to 1.
std::vector<Eigen::MatrixXd> bare_weights(const DressedFrame& frame);

// Integrate the dressed-frame equation of motion
//   dCd/dt = -i diag(lambda(t)) Cd - K(t) Cd
// with lambda and K interpolated linearly between frame samples. The initial
// state is given in the bare basis and rotated by T(t_start)^dagger; the
// returned trajectory holds dressed amplitudes at exactly the frame times.
Trajectory propagate_dressed(const DressedFrame& frame, const State& initial,
                             double tolerance = 1e-10);

// Rotate a dressed-amplitude trajectory back to bare-basis populations,
// sample by sample. The trajectory must live on the frame's grid.
std::vector<Eigen::VectorXd> to_bare_populations(const DressedFrame& frame,
                                                 const Trajectory& dressed);

// The two-state subset that carries the population transfer: the dressed
// state hosting the initial bare state at t_start and the partner with the
// largest peak |K_IJ|. A pair counts as active only when that peak exceeds
// threshold_factor times the median peak coupling of all other pairs (with
// an absolute floor of 1e-9 /ns), so a zero field reports no active subset.
struct ActiveSubset {
  int host = 0;                // dressed index matching the initial bare state
  int partner = 0;             // dressed index with maximal coupling to host
  double crossing_time = 0.0;  // ns, time of minimum host-partner gap
  double min_gap = 0.0;        // rad/ns, minimum host-partner gap
  double peak_coupling = 0.0;  // 1/ns, max over time of |K_host,partner|
};

std::optional<ActiveSubset> active_subset(const DressedFrame& frame,
                                          int initial_bare,
                                          double threshold_factor = 10.0);

// Adiabaticity diagnostics: the sweep condition |chirp| tau0 > omega21, the
// Landau-Zener condition |chirp| < peak_rabi^2, and frame-derived metrics
// for the tracked pair seeded from bare state 0. When no pair passes the
// active-subset threshold the best-effort pair is still reported and
// has_active_subset is false.
struct AdiabaticityReport {
  bool condition_sweep = false;
  double sweep_value = 0.0;  // |chirp| * tau0, GHz
  double sweep_bound = 0.0;  // omega21, GHz
  bool condition_lz = false;
  double lz_value = 0.0;     // |chirp|, GHz/ns
  double lz_bound = 0.0;     // peak_rabi^2, GHz^2
  double min_gap = 0.0;          // rad/ns, tracked pair
  double coupling_ratio = 0.0;   // max_t |K_IJ| / (2 pi |lambda_I - lambda_J|)
  bool has_active_subset = false;
  int host = 0;
  int partner = 0;
  double crossing_time = 0.0;    // ns
};

AdiabaticityReport adiabaticity_report(const PulseParams& pulse,
                                       const AtomSystem& atom,
                                       const DressedFrame& frame);

}  // namespace chirplab
