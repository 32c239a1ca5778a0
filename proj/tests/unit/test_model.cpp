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

#include <cmath>
#include <stdexcept>

#include "chirplab/model.hpp"
#include "doctest.h"
#include "support/reference_runs.hpp"

using namespace chirplab;
using testing::run1_pulse;

TEST_CASE("pulse validation rejects bad fields") {
  PulseParams p = run1_pulse();
  CHECK_NOTHROW(validate(p));

  p.peak_rabi = -0.1;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);

  p = run1_pulse();
  p.fwhm = 0.0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);

  p = run1_pulse();
  p.chirp_rate = std::nan("");
  CHECK_THROWS_AS(validate(p), std::invalid_argument);

  p = run1_pulse();
  p.detuning = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

TEST_CASE("atom validation enforces the level ordering") {
  AtomSystem atom = rb85_d1_preset();
  CHECK_NOTHROW(validate(atom));

  atom.omega43 = -0.1;
  CHECK_THROWS_AS(validate(atom), std::invalid_argument);

  atom = rb85_d1_preset();
  atom.omega21 = atom.omega43;
  CHECK_THROWS_AS(validate(atom), std::invalid_argument);

  // A vanishing excited splitting is legal: it is the exact-reduction limit.
  atom = rb85_d1_preset();
  atom.omega43 = 0.0;
  CHECK_NOTHROW(validate(atom));
}

TEST_CASE("tau0 and the envelope follow the intensity-FWHM convention") {
  const PulseParams p = run1_pulse();
  const double t0 = tau0(p);
  CHECK(t0 == doctest::Approx(2.995 / (2.0 * std::sqrt(std::log(2.0)))));

  CHECK(envelope(p.center, p) == doctest::Approx(p.peak_rabi));
  // Half the FWHM away from the peak the amplitude is down by sqrt(2),
  // so the intensity is down by exactly 2.
  const double half = envelope(p.center + 0.5 * p.fwhm, p);
  CHECK(half == doctest::Approx(p.peak_rabi / std::sqrt(2.0)));
  CHECK(envelope(p.center - 0.5 * p.fwhm, p) == doctest::Approx(half));
  // Negligible at the default window edge.
  CHECK(envelope(p.center + 5.0 * std::sqrt(2.0) * t0, p) <
        2e-11 * p.peak_rabi);

  CHECK(bandwidth(p) == doctest::Approx(1.0 / t0));
}

TEST_CASE("four-level Hamiltonian matches its contract") {
  PulseParams p = run1_pulse();
  p.detuning = 0.25;
  p.center = 0.7;
  const AtomSystem atom = rb85_d1_preset();

  for (double t : {-3.0, 0.7, 2.1}) {
    const Matrix h = hamiltonian4(t, p, atom);
    REQUIRE(h.rows() == 4);
    REQUIRE(h.cols() == 4);
    CHECK(is_hermitian(h));

    const double sweep = p.chirp_rate * (t - p.center);
    CHECK(h(0, 0).real() ==
          doctest::Approx(p.detuning + atom.omega43 + sweep));
    CHECK(h(1, 1).real() ==
          doctest::Approx(p.detuning + atom.omega43 + atom.omega21 + sweep));
    CHECK(h(2, 2).real() == doctest::Approx(0.0));
    CHECK(h(3, 3).real() == doctest::Approx(atom.omega43));

    const double half = -0.5 * envelope(t, p);
    CHECK(h(0, 2).real() == doctest::Approx(half));
    CHECK(h(0, 3).real() == doctest::Approx(half));
    CHECK(h(1, 2).real() == doctest::Approx(half));
    CHECK(h(1, 3).real() == doctest::Approx(half));
    CHECK(std::abs(h(0, 1)) == doctest::Approx(0.0));
    CHECK(std::abs(h(2, 3)) == doctest::Approx(0.0));
  }
}

TEST_CASE("three-level Hamiltonian matches its contract") {
  const PulseParams p = run1_pulse();
  const AtomSystem atom = rb85_d1_preset();

  const double t = 1.3;
  const Matrix h = hamiltonian3(t, p, atom);
  REQUIRE(h.rows() == 3);
  CHECK(is_hermitian(h));

  const double sweep = p.chirp_rate * (t - p.center);
  CHECK(h(0, 0).real() == doctest::Approx(sweep));
  CHECK(h(1, 1).real() == doctest::Approx(atom.omega21 + sweep));
  CHECK(h(2, 2).real() == doctest::Approx(0.0));
  const double coupling = -envelope(t, p) / std::sqrt(2.0);
  CHECK(h(0, 2).real() == doctest::Approx(coupling));
  CHECK(h(1, 2).real() == doctest::Approx(coupling));
  CHECK(std::abs(h(0, 1)) == doctest::Approx(0.0));

  PulseParams detuned = p;
  detuned.detuning = 0.1;
  CHECK_THROWS_AS(hamiltonian3(t, detuned, atom), std::domain_error);
}

TEST_CASE("preset carries the 85Rb D1 constants") {
  const AtomSystem atom = rb85_d1_preset();
  CHECK(atom.omega21 == doctest::Approx(3.035));
  CHECK(atom.omega43 == doctest::Approx(0.362));
  CHECK(atom.labels[0] == "|1>");
  CHECK(atom.labels[3] == "|4>");
}

TEST_CASE("is_hermitian flags a perturbed matrix") {
  Matrix h = hamiltonian4(0.2, run1_pulse(), rb85_d1_preset());
  CHECK(is_hermitian(h));
  h(0, 2) += Complex(0.0, 1e-6);
  CHECK_FALSE(is_hermitian(h));
  CHECK(is_hermitian(h, 1e-5));
}
