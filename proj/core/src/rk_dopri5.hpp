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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "chirplab/propagator.hpp"

// Dormand-Prince 5(4) for complex state vectors, with FSAL and the standard
// quartic dense-output interpolant. Shared by the bare-basis propagator and
// the dressed-frame propagator; not part of the installed interface.

namespace chirplab::detail {

struct DenseSegment {
  double t0 = 0.0;
  double h = 0.0;
  State r1, r2, r3, r4, r5;

  State eval(double t) const {
    const double theta = (t - t0) / h;
    const double th1 = 1.0 - theta;
    return r1 + theta * (r2 + th1 * (r3 + theta * (r4 + th1 * r5)));
  }
};

// rhs(t, y, dydt); on_step(segment, y_new, t_new) after each accepted step.
template <typename Rhs, typename OnStep>
void dopri5(Rhs&& rhs, const State& y0, double t_start, double t_end,
            double rtol, double atol, double max_step, OnStep&& on_step) {
  constexpr double a21 = 1.0 / 5.0;
  constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                   a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                   a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                   a65 = -5103.0 / 18656.0;
  constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                   b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
  constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                   c5 = 8.0 / 9.0;
  // b (order 5) minus bhat (order 4): the embedded error weights.
  constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                   e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                   e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
  // Dense-output weights.
  constexpr double d1 = -12715105075.0 / 11282082432.0;
  constexpr double d3 = 87487479700.0 / 32700410799.0;
  constexpr double d4 = -10690763975.0 / 1880347072.0;
  constexpr double d5 = 701980252875.0 / 199316789632.0;
  constexpr double d6 = -1453857185.0 / 822651844.0;
  constexpr double d7 = 69997945.0 / 29380423.0;

  const double span = t_end - t_start;
  const auto n = y0.size();

  double t = t_start;
  State y = y0;
  State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
  State ytmp(n), ynew(n), errv(n);
  rhs(t, y, k1);

  double h = std::min(max_step, span);
  bool rejected = false;
  std::uint64_t steps = 0;
  constexpr std::uint64_t kMaxSteps = 200'000'000;

  while (t < t_end) {
    if (++steps > kMaxSteps) {
      throw IntegrationError("step limit exceeded", t);
    }
    if (h < 32.0 * std::numeric_limits<double>::epsilon() *
                std::max(std::abs(t), 1.0)) {
      throw IntegrationError("step size underflow", t);
    }
    bool last = false;
    if (t + h >= t_end) {
      h = t_end - t;
      last = true;
    }

    ytmp = y + h * (a21 * k1);
    rhs(t + c2 * h, ytmp, k2);
    ytmp = y + h * (a31 * k1 + a32 * k2);
    rhs(t + c3 * h, ytmp, k3);
    ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    rhs(t + c4 * h, ytmp, k4);
    ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    rhs(t + c5 * h, ytmp, k5);
    ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    rhs(t + h, ytmp, k6);
    ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    rhs(t + h, ynew, k7);
    errv = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double sc =
          atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double r = std::abs(errv[i]) / sc;
      err += r * r;
    }
    err = std::sqrt(err / double(n));

    if (err <= 1.0) {
      DenseSegment seg;
      seg.t0 = t;
      seg.h = h;
      seg.r1 = y;
      seg.r2 = ynew - y;
      seg.r3 = h * k1 - seg.r2;
      seg.r4 = seg.r2 - h * k7 - seg.r3;
      seg.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);

      t = last ? t_end : t + h;
      y.swap(ynew);
      k1.swap(k7);

      double factor =
          err == 0.0 ? 5.0
                     : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      if (rejected) factor = std::min(factor, 1.0);
      rejected = false;
      h = std::min(h * factor, max_step);

      on_step(seg, y, t);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      rejected = true;
    }
  }
}

// Record the solution at the given strictly increasing sample times
// (t_start and t_end included when requested) through dense output.
template <typename Rhs>
std::vector<State> integrate_sampled(Rhs&& rhs, const State& y0,
                                     double t_start, double t_end, double rtol,
                                     double atol, double max_step,
                                     const std::vector<double>& samples) {
  const double slack =
      1e-12 * std::max(1.0, std::abs(t_end - t_start));
  std::vector<State> out;
  out.reserve(samples.size());

  std::size_t next = 0;
  while (next < samples.size() && samples[next] <= t_start + slack) {
    out.push_back(y0);
    ++next;
  }

  State y_last = y0;
  dopri5(
      rhs, y0, t_start, t_end, rtol, atol, max_step,
      [&](const DenseSegment& seg, const State& y_new, double t_new) {
        while (next < samples.size() && samples[next] <= t_new + slack) {
          out.push_back(samples[next] >= t_new - slack ? y_new
                                                       : seg.eval(samples[next]));
          ++next;
        }
        y_last = y_new;
      });

  while (next < samples.size() && samples[next] <= t_end + slack) {
    out.push_back(y_last);
    ++next;
  }
  return out;
}

}  // namespace chirplab::detail
