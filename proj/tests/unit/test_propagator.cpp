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
#include <limits>
#include <stdexcept>

#include "chirplab/model.hpp"
#include "chirplab/propagator.hpp"
#include "doctest.h"
#include "support/reference_runs.hpp"

using namespace chirplab;
using testing::bare_ground;
using testing::run1_pulse;
using testing::run2_pulse;
using testing::uniform_grid;

namespace {

HBuilder builder4(const PulseParams& pulse, const AtomSystem& atom) {
  return [pulse, atom](double t) { return hamiltonian4(t, pulse, atom); };
}

}  // namespace

TEST_CASE("default window spans 5 sqrt(2) tau0 around the pulse center") {
  PulseParams p = run1_pulse();
  p.center = 1.5;
  const IntegrationSettings s = default_window(p);
  const double half = 5.0 * std::sqrt(2.0) * tau0(p);
  CHECK(s.t_start == doctest::Approx(p.center - half));
  CHECK(s.t_end == doctest::Approx(p.center + half));
  CHECK(s.max_step > 0.0);
  CHECK(s.tolerance == doctest::Approx(1e-10));
  CHECK(s.record_stride >= 1);
  CHECK_NOTHROW(validate(s));
}

TEST_CASE("settings validation") {
  IntegrationSettings s = default_window(run1_pulse());
  s.t_end = s.t_start;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);

  s = default_window(run1_pulse());
  s.max_step = 0.0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);

  s = default_window(run1_pulse());
  s.tolerance = -1e-10;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);

  s = default_window(run1_pulse());
  s.record_stride = 0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
}

TEST_CASE("zero Hamiltonian leaves the state untouched") {
  const HBuilder zero = [](double) { return Matrix::Zero(2, 2); };
  IntegrationSettings s;
  s.t_start = 0.0;
  s.t_end = 3.0;
  s.max_step = 0.1;
  State init = State::Zero(2);
  init[0] = Complex(0.6, 0.0);
  init[1] = Complex(0.0, 0.8);
  const Trajectory traj = propagate(zero, init, s);
  REQUIRE(traj.size() >= 2);
  CHECK((traj.states.back() - init).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(traj.times.front() == doctest::Approx(0.0));
  CHECK(traj.times.back() == doctest::Approx(3.0));
}

TEST_CASE("constant resonant coupling gives Rabi oscillation") {
  const double rabi = 1.7;
  const HBuilder h = [rabi](double) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = m(1, 0) = -0.5 * rabi;
    return m;
  };
  IntegrationSettings s;
  s.t_start = 0.0;
  s.t_end = 4.0;
  s.max_step = 0.01;
  const Trajectory traj = propagate(h, bare_ground(2), s);
  const Eigen::VectorXd fin = final_populations(traj);
  const double expected = std::sin(0.5 * rabi * s.t_end);
  CHECK(fin[1] == doctest::Approx(expected * expected).epsilon(1e-8));
  CHECK(fin.sum() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dark pulse accumulates only diagonal phase") {
  PulseParams p = run1_pulse();
  p.peak_rabi = 0.0;
  const AtomSystem atom = rb85_d1_preset();
  const IntegrationSettings s = default_window(p);
  const Trajectory traj = propagate(builder4(p, atom), bare_ground(4), s);

  for (std::size_t k = 0; k < traj.size(); ++k) {
    CHECK(std::abs(traj.populations[k][0] - 1.0) < 1e-9);
  }
  // c1(t) = exp(-i Integral of (w43 + alpha t') dt') for a dark pulse.
  const double span = s.t_end - s.t_start;
  const double phase = atom.omega43 * span +
                       0.5 * p.chirp_rate *
                           (s.t_end * s.t_end - s.t_start * s.t_start);
  const Complex expected = std::exp(Complex(0.0, -phase));
  CHECK(std::abs(traj.states.back()[0] - expected) < 1e-7);
}

TEST_CASE("adiabatic reference run inverts the ground doublet") {
  const IntegrationSettings s = default_window(run1_pulse());
  const Trajectory traj =
      propagate(builder4(run1_pulse(), rb85_d1_preset()), bare_ground(4), s);
  const Eigen::VectorXd fin = final_populations(traj);

  CHECK(fin[1] >= 0.9);
  CHECK(fin[0] <= 0.05);
  CHECK(std::abs(fin[0] - 0.0041) < 1e-3);
  CHECK(std::abs(fin[1] - 0.9726) < 1e-3);
  CHECK(std::abs(fin[2] - 0.0130) < 1e-3);
  CHECK(std::abs(fin[3] - 0.0103) < 1e-3);

  for (std::size_t k = 0; k < traj.size(); ++k) {
    CHECK(std::abs(traj.populations[k].sum() - 1.0) < 1e-6);
  }
}

TEST_CASE("slow chirp fails to invert") {
  const IntegrationSettings s = default_window(run2_pulse());
  const Trajectory traj =
      propagate(builder4(run2_pulse(), rb85_d1_preset()), bare_ground(4), s);
  const Eigen::VectorXd fin = final_populations(traj);
  CHECK(fin[0] > 0.5);
  CHECK(std::abs(fin[0] - 0.7392) < 1e-3);
}

TEST_CASE("transient excited population stays in the expected bracket") {
  const IntegrationSettings s = default_window(run1_pulse());
  const Trajectory traj =
      propagate(builder4(run1_pulse(), rb85_d1_preset()), bare_ground(4), s);
  const double peak = transient_max(traj, {2, 3});
  CHECK(peak >= 0.02);
  CHECK(peak <= 0.30);
  CHECK_THROWS_AS(transient_max(traj, {4}), std::out_of_range);
  CHECK_THROWS_AS(transient_max(traj, {-1}), std::out_of_range);
}

TEST_CASE("step halving leaves final populations unchanged at 1e-7") {
  for (const PulseParams& p : {run1_pulse(), run2_pulse()}) {
    IntegrationSettings coarse = default_window(p);
    IntegrationSettings fine = coarse;
    fine.max_step *= 0.5;
    const HBuilder h = builder4(p, rb85_d1_preset());
    const Eigen::VectorXd a =
        final_populations(propagate(h, bare_ground(4), coarse));
    const Eigen::VectorXd b =
        final_populations(propagate(h, bare_ground(4), fine));
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("global energy shift leaves populations invariant") {
  const PulseParams p = run1_pulse();
  const AtomSystem atom = rb85_d1_preset();
  const double shift = 17.3;
  const HBuilder base = builder4(p, atom);
  const HBuilder shifted = [base, shift](double t) {
    Matrix m = base(t);
    m += shift * Matrix::Identity(m.rows(), m.cols());
    return m;
  };

  const IntegrationSettings s = default_window(p);
  const std::vector<double> grid = uniform_grid(s.t_start, s.t_end, 801);
  const Trajectory ta = propagate_sampled(base, bare_ground(4), s, grid);
  const Trajectory tb = propagate_sampled(shifted, bare_ground(4), s, grid);
  REQUIRE(ta.size() == tb.size());

  double worst = 0.0;
  for (std::size_t k = 0; k < ta.size(); ++k) {
    worst = std::max(
        worst, (ta.populations[k] - tb.populations[k]).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("sampled propagation validates its grid") {
  const PulseParams p = run1_pulse();
  const IntegrationSettings s = default_window(p);
  const HBuilder h = builder4(p, rb85_d1_preset());

  CHECK_THROWS_AS(
      propagate_sampled(h, bare_ground(4), s, {s.t_start, s.t_start}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      propagate_sampled(h, bare_ground(4), s, {s.t_start - 1.0, s.t_end}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      propagate_sampled(h, bare_ground(4), s, {s.t_start, s.t_end + 1.0}),
      std::invalid_argument);

  const Trajectory traj = propagate_sampled(h, bare_ground(4), s,
                                            {s.t_start, 0.0, s.t_end});
  REQUIRE(traj.size() == 3);
  CHECK(traj.times[1] == doctest::Approx(0.0));
  CHECK(traj.populations[0][0] == doctest::Approx(1.0));
}

TEST_CASE("dense-output samples agree with a direct integration stop") {
  const PulseParams p = run1_pulse();
  const AtomSystem atom = rb85_d1_preset();
  const HBuilder h = builder4(p, atom);
  IntegrationSettings s = default_window(p);

  const double t_mid = 0.3125;
  const Trajectory sampled =
      propagate_sampled(h, bare_ground(4), s, {t_mid});

  IntegrationSettings stop = s;
  stop.t_end = t_mid;
  const Trajectory direct = propagate(h, bare_ground(4), stop);

  CHECK((sampled.states.back() - direct.states.back()).cwiseAbs().maxCoeff() <
        1e-7);
}

TEST_CASE("unnormalized initial state is rejected") {
  const IntegrationSettings s = default_window(run1_pulse());
  State bad = State::Zero(4);
  bad[0] = 2.0;
  CHECK_THROWS_AS(
      propagate(builder4(run1_pulse(), rb85_d1_preset()), bad, s),
      std::invalid_argument);
}

TEST_CASE("non-finite Hamiltonian raises IntegrationError with a time") {
  const HBuilder h = [](double t) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = m(1, 0) =
        t > 0.5 ? std::numeric_limits<double>::quiet_NaN() : -1.0;
    return m;
  };
  IntegrationSettings s;
  s.t_start = 0.0;
  s.t_end = 1.0;
  s.max_step = 0.05;
  try {
    propagate(h, bare_ground(2), s);
    FAIL("expected IntegrationError");
  } catch (const IntegrationError& e) {
    CHECK(e.time() >= 0.0);
    CHECK(e.time() <= 1.0);
  }
}

TEST_CASE("final_populations rejects an empty trajectory") {
  CHECK_THROWS_AS(final_populations(Trajectory{}), std::invalid_argument);
}
