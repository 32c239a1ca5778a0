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

#include "chirplab/model.hpp"

#include <cmath>
#include <stdexcept>

namespace chirplab {

namespace {
bool finite(double x) { return std::isfinite(x); }
}  // namespace

void validate(const PulseParams& pulse) {
  if (!finite(pulse.peak_rabi) || pulse.peak_rabi < 0.0) {
    throw std::invalid_argument("pulse: peak_rabi must be finite and >= 0");
  }
  if (!finite(pulse.fwhm) || pulse.fwhm <= 0.0) {
    throw std::invalid_argument("pulse: fwhm must be finite and > 0");
  }
  if (!finite(pulse.chirp_rate) || !finite(pulse.detuning) ||
      !finite(pulse.center)) {
    throw std::invalid_argument("pulse: chirp_rate, detuning, center must be finite");
  }
}

void validate(const AtomSystem& atom) {
  if (!finite(atom.omega21) || !finite(atom.omega43)) {
    throw std::invalid_argument("atom: splittings must be finite");
  }
  if (atom.omega21 <= 0.0) {
    throw std::invalid_argument("atom: omega21 must be > 0");
  }
  if (atom.omega43 < 0.0) {
    throw std::invalid_argument("atom: omega43 must be >= 0");
  }
  if (atom.omega21 <= atom.omega43) {
    throw std::invalid_argument("atom: omega21 must exceed omega43");
  }
}

double tau0(const PulseParams& pulse) {
  return pulse.fwhm / (2.0 * std::sqrt(std::log(2.0)));
}

double envelope(double t, const PulseParams& pulse) {
  const double t0 = tau0(pulse);
  const double d = (t - pulse.center) / t0;
  return pulse.peak_rabi * std::exp(-0.5 * d * d);
}

double bandwidth(const PulseParams& pulse) { return 1.0 / tau0(pulse); }

Matrix hamiltonian4(double t, const PulseParams& pulse,
                    const AtomSystem& atom) {
  const double a = pulse.chirp_rate * (t - pulse.center);
  const double g = -0.5 * envelope(t, pulse);

  Matrix h = Matrix::Zero(4, 4);
  h(0, 0) = pulse.detuning + atom.omega43 + a;
  h(1, 1) = pulse.detuning + atom.omega43 + atom.omega21 + a;
  h(3, 3) = atom.omega43;
  h(0, 2) = h(2, 0) = g;
  h(0, 3) = h(3, 0) = g;
  h(1, 2) = h(2, 1) = g;
  h(1, 3) = h(3, 1) = g;
  return h;
}

Matrix hamiltonian3(double t, const PulseParams& pulse,
                    const AtomSystem& atom) {
  if (pulse.detuning != 0.0) {
    throw std::domain_error(
        "three-level reduction requires zero one-photon detuning");
  }
  const double a = pulse.chirp_rate * (t - pulse.center);
  const double g = -envelope(t, pulse) / std::sqrt(2.0);

  Matrix h = Matrix::Zero(3, 3);
  h(0, 0) = a;
  h(1, 1) = atom.omega21 + a;
  h(0, 2) = h(2, 0) = g;
  h(1, 2) = h(2, 1) = g;
  return h;
}

AtomSystem rb85_d1_preset() {
  AtomSystem atom;
  atom.omega21 = 3.035;
  atom.omega43 = 0.362;
  return atom;
}

bool is_hermitian(const Matrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  if (h.size() == 0) return true;
  return (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace chirplab
