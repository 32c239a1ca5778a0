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

#include <array>
#include <complex>
#include <string>

#include <Eigen/Dense>

// Domain types and Hamiltonian builders for a four-level hyperfine system
// driven by a single linearly chirped Gaussian pulse, plus the three-level
// Lambda approximation of the same system.
//
// Unit conventions used throughout the library:
//   * times are in ns,
//   * pulse and atom parameters (peak Rabi frequency, hyperfine splittings,
//     detuning) are quoted in GHz and enter the Hamiltonian matrices
//     directly, so matrix entries carry the dimension rad/ns,
//   * chirp_rate is the signed slope of the instantaneous frequency in
//     GHz/ns,
//   * the equation of motion integrated downstream is i dC/dt = H(t) C.
//
// The Gaussian FWHM parameter refers to the intensity profile of the pulse;
// the amplitude envelope used in the couplings is therefore
// exp(-(t-center)^2 / (2 tau0^2)) with tau0 = fwhm / (2 sqrt(ln 2)).

namespace chirplab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using State = Eigen::VectorXcd;

// Chirped Gaussian pulse description.
struct PulseParams {
  double peak_rabi = 0.0;   // GHz, >= 0
  double fwhm = 1.0;        // ns, > 0
  double chirp_rate = 0.0;  // GHz/ns, signed
  double detuning = 0.0;    // GHz
  double center = 0.0;      // ns

  friend bool operator==(const PulseParams&, const PulseParams&) = default;
};

// Level-structure constants. omega21 is the ground hyperfine splitting,
// omega43 the excited one; omega21 > omega43 >= 0.
struct AtomSystem {
  double omega21 = 0.0;  // GHz
  double omega43 = 0.0;  // GHz
  std::array<std::string, 4> labels = {"|1>", "|2>", "|3>", "|4>"};

  friend bool operator==(const AtomSystem&, const AtomSystem&) = default;
};

// Throw std::invalid_argument when a field violates its constraints.
void validate(const PulseParams& pulse);
void validate(const AtomSystem& atom);

// Gaussian time constant tau0 = fwhm / (2 sqrt(ln 2)), strictly positive.
double tau0(const PulseParams& pulse);

// Rabi-frequency envelope peak_rabi * exp(-(t-center)^2 / (2 tau0^2)).
double envelope(double t, const PulseParams& pulse);

// Spectral bandwidth estimate 1/tau0 in GHz. Diagnostic only; the precise
// bandwidth measure depends on the convention chosen for the pulse spectrum.
double bandwidth(const PulseParams& pulse);

// 4x4 interaction Hamiltonian in the rotating frame of the chirped carrier.
// Diagonal [D + w43 + a(t-T), D + w43 + w21 + a(t-T), 0, w43] with
// a(t-T) = chirp_rate * (t - center); every ground level (1, 2) couples to
// every excited level (3, 4) with -envelope(t)/2; entries (1,2) and (3,4)
// vanish. Real symmetric, returned as a complex matrix so downstream gauge
// logic generalizes.
Matrix hamiltonian4(double t, const PulseParams& pulse, const AtomSystem& atom);

// 3x3 Lambda-system Hamiltonian valid at zero one-photon detuning.
// Diagonal [a(t-T), w21 + a(t-T), 0]; levels 1 and 2 couple to level 3 with
// -envelope(t)/sqrt(2); entry (1,2) vanishes.
// Throws std::domain_error when pulse.detuning != 0.
Matrix hamiltonian3(double t, const PulseParams& pulse, const AtomSystem& atom);

// 85Rb D1 constants: omega21 = 3.035 GHz, omega43 = 0.362 GHz.
AtomSystem rb85_d1_preset();

// True when h equals its conjugate transpose entrywise within tol.
bool is_hermitian(const Matrix& h, double tol = 1e-12);

}  // namespace chirplab
