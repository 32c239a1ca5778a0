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

#include "chirplab/lambda_reduction.hpp"
#include "chirplab/model.hpp"
#include "doctest.h"
#include "support/reference_runs.hpp"

using namespace chirplab;
using testing::run1_pulse;

TEST_CASE("pm basis change is unitary and involutive") {
  State s = State::Zero(4);
  s[0] = Complex(0.1, 0.2);
  s[1] = Complex(-0.3, 0.4);
  s[2] = Complex(0.5, -0.6);
  s[3] = Complex(0.25, 0.1);

  const State pm = to_pm_basis(s);
  CHECK(pm.squaredNorm() == doctest::Approx(s.squaredNorm()));
  CHECK(pm[0] == s[0]);
  CHECK(pm[1] == s[1]);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(pm[2] - (s[2] + s[3]) * inv_sqrt2) < 1e-15);
  CHECK(std::abs(pm[3] - (s[2] - s[3]) * inv_sqrt2) < 1e-15);

  const State back = from_pm_basis(pm);
  CHECK((back - s).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(to_pm_basis(State::Zero(3)), std::invalid_argument);
  CHECK_THROWS_AS(from_pm_basis(State::Zero(5)), std::invalid_argument);
}

TEST_CASE("excited-state population splits evenly into the pm doublet") {
  State s = State::Zero(4);
  s[2] = 1.0;
  const State pm = to_pm_basis(s);
  CHECK(std::norm(pm[2]) == doctest::Approx(0.5));
  CHECK(std::norm(pm[3]) == doctest::Approx(0.5));
}

TEST_CASE("a- drift is small for the adiabatic run") {
  const double drift = aminus_drift(run1_pulse(), rb85_d1_preset());
  // Regression value from the reference build.
  CHECK(std::abs(drift - 0.1622) < 2e-3);
  CHECK(drift < 0.25);

  PulseParams detuned = run1_pulse();
  detuned.detuning = 0.2;
  CHECK_THROWS_AS(aminus_drift(detuned, rb85_d1_preset()), std::domain_error);
}

TEST_CASE("model comparison for the adiabatic run") {
  const ReductionReport report =
      compare_models(run1_pulse(), rb85_d1_preset());

  CHECK(report.validity_chirp);
  CHECK(std::abs(report.chirp_value - 5.30) < 2e-3);
  CHECK(report.chirp_bound == doctest::Approx(0.362));
  CHECK(report.validity_rabi);
  CHECK(report.rabi_value == doctest::Approx(3.035));

  CHECK(report.population_gap <= 0.05);
  CHECK(report.qualitative_match);
  CHECK(std::abs(report.final_four[1] - report.final_three[1]) <= 0.05);
  CHECK(std::abs(report.final_four[1] - 0.9726) < 1e-3);
  CHECK(std::abs(report.final_three[1] - 0.9955) < 1e-3);

  REQUIRE(report.times.size() == 2001);
  REQUIRE(report.pops_four.size() == report.times.size());
  REQUIRE(report.pops_three.size() == report.times.size());
  CHECK(report.pops_four.front()[0] == doctest::Approx(1.0));
  CHECK(report.pops_three.front()[0] == doctest::Approx(1.0));
}

TEST_CASE("vanishing excited splitting makes the reduction exact") {
  AtomSystem atom = rb85_d1_preset();
  atom.omega43 = 0.0;
  const ReductionReport report = compare_models(run1_pulse(), atom);
  CHECK(report.population_gap < 1e-6);
}

TEST_CASE("comparison requires zero detuning") {
  PulseParams detuned = run1_pulse();
  detuned.detuning = -0.05;
  CHECK_THROWS_AS(compare_models(detuned, rb85_d1_preset()),
                  std::domain_error);
}

TEST_CASE("agreement threshold is honored") {
  const ReductionReport strict =
      compare_models(run1_pulse(), rb85_d1_preset(), 0.01);
  CHECK_FALSE(strict.qualitative_match);
  CHECK_THROWS_AS(compare_models(run1_pulse(), rb85_d1_preset(), 0.0),
                  std::invalid_argument);
}
