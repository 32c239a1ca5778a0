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

#include "chirplab/dressed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "rk_dopri5.hpp"

namespace chirplab {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

void check_grid(const std::vector<double>& times) {
  if (times.size() < 3) {
    throw std::invalid_argument("dressed frame needs at least 3 samples");
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) {
      throw std::invalid_argument("frame times must be strictly increasing");
    }
  }
}

// Rotate each column so its largest-magnitude entry is real and positive.
void gauge_fix(Matrix& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index imax = 0;
    vectors.col(j).cwiseAbs().maxCoeff(&imax);
    const Complex z = vectors(imax, j);
    if (std::abs(z) > 0.0) {
      vectors.col(j) *= std::conj(z) / std::abs(z);
    }
  }
}

// Greedy maximum-overlap assignment of new eigenvectors to tracked slots.
std::vector<int> match_by_overlap(const Matrix& prev, const Matrix& next,
                                  double t) {
  const Eigen::Index n = prev.cols();
  const Eigen::MatrixXd overlap = (prev.adjoint() * next).cwiseAbs();

  std::vector<int> perm(std::size_t(n), -1);
  std::vector<bool> row_used(std::size_t(n), false);
  std::vector<bool> col_used(std::size_t(n), false);
  for (Eigen::Index pick = 0; pick < n; ++pick) {
    double best = -1.0;
    Eigen::Index bi = -1, bj = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (row_used[std::size_t(i)]) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (col_used[std::size_t(j)]) continue;
        if (overlap(i, j) > best) {
          best = overlap(i, j);
          bi = i;
          bj = j;
        }
      }
    }
    if (best < 0.5) {
      throw TrackingError("continuity tracking lost a state", t);
    }
    perm[std::size_t(bi)] = int(bj);
    row_used[std::size_t(bi)] = true;
    col_used[std::size_t(bj)] = true;
  }
  return perm;
}

struct PairScan {
  int host = 0;
  int partner = 0;
  double peak_coupling = 0.0;
  double crossing_time = 0.0;
  double min_gap = 0.0;
};

// Peak |K_IJ| over time for every pair, as a symmetric real matrix.
Eigen::MatrixXd peak_couplings(const DressedFrame& frame) {
  const int n = frame.dim();
  Eigen::MatrixXd peak = Eigen::MatrixXd::Zero(n, n);
  for (const Matrix& k : frame.couplings) {
    peak = peak.cwiseMax(k.cwiseAbs());
  }
  return 0.5 * (peak + peak.transpose());
}

// Parabolic refinement of the minimum of the host-partner gap.
void refine_gap(const DressedFrame& frame, PairScan& scan) {
  const auto gap_at = [&](std::size_t k) {
    return std::abs(frame.energies[k][scan.host] -
                    frame.energies[k][scan.partner]);
  };
  std::size_t kmin = 0;
  double gmin = gap_at(0);
  for (std::size_t k = 1; k < frame.size(); ++k) {
    const double g = gap_at(k);
    if (g < gmin) {
      gmin = g;
      kmin = k;
    }
  }
  scan.crossing_time = frame.times[kmin];
  scan.min_gap = gmin;
  if (kmin == 0 || kmin + 1 == frame.size()) return;

  const double tl = frame.times[kmin - 1], tc = frame.times[kmin],
               tr = frame.times[kmin + 1];
  const double gl = gap_at(kmin - 1), gc = gap_at(kmin), gr = gap_at(kmin + 1);
  const double s1 = (gc - gl) / (tc - tl);
  const double s2 = (gr - gc) / (tr - tc);
  const double curv = (s2 - s1) / (tr - tl);
  if (curv <= 0.0) return;

  double tv = 0.5 * (tl + tc) - s1 / (2.0 * curv);
  tv = std::clamp(tv, tl, tr);
  const double gv = gl + s1 * (tv - tl) + curv * (tv - tl) * (tv - tc);
  scan.crossing_time = tv;
  scan.min_gap = std::clamp(gv, 0.0, gc);
}

PairScan scan_pair(const DressedFrame& frame, int initial_bare) {
  const int n = frame.dim();
  if (n < 2) {
    throw std::invalid_argument("active subset needs at least two states");
  }
  if (initial_bare < 0 || initial_bare >= n) {
    throw std::out_of_range("initial bare index outside the system dimension");
  }

  PairScan scan;
  frame.transforms.front()
      .row(initial_bare)
      .cwiseAbs()
      .maxCoeff(&scan.host);

  const Eigen::MatrixXd peak = peak_couplings(frame);
  scan.partner = scan.host == 0 ? 1 : 0;
  for (int j = 0; j < n; ++j) {
    if (j != scan.host && peak(scan.host, j) > peak(scan.host, scan.partner)) {
      scan.partner = j;
    }
  }
  scan.peak_coupling = peak(scan.host, scan.partner);
  refine_gap(frame, scan);
  return scan;
}

// Median peak coupling over all pairs other than (host, partner).
double off_pair_median(const Eigen::MatrixXd& peak, int host, int partner) {
  std::vector<double> values;
  for (int i = 0; i < peak.rows(); ++i) {
    for (int j = i + 1; j < peak.cols(); ++j) {
      if ((i == host && j == partner) || (i == partner && j == host)) continue;
      values.push_back(peak(i, j));
    }
  }
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

DressedFrame dressed_frame(const HBuilder& hbuilder,
                           const std::vector<double>& times) {
  check_grid(times);
  const std::size_t n = times.size();

  DressedFrame frame;
  frame.times = times;
  frame.energies.reserve(n);
  frame.transforms.reserve(n);

  Eigen::SelfAdjointEigenSolver<Matrix> solver;
  for (std::size_t k = 0; k < n; ++k) {
    solver.compute(hbuilder(times[k]));
    if (solver.info() != Eigen::Success) {
      throw TrackingError("eigendecomposition failed", times[k]);
    }
    Eigen::VectorXd values = solver.eigenvalues();
    Matrix vectors = solver.eigenvectors();

    if (k == 0) {
      for (Eigen::Index i = 1; i < values.size(); ++i) {
        if (values[i] - values[i - 1] < 1e-10) {
          throw TrackingError("degenerate eigenvalues at the first sample",
                              times[0]);
        }
      }
      gauge_fix(vectors);
      frame.energies.push_back(values);
      frame.transforms.push_back(vectors);
      continue;
    }

    const Matrix& prev = frame.transforms.back();
    const std::vector<int> perm = match_by_overlap(prev, vectors, times[k]);

    const Eigen::Index dim = values.size();
    Eigen::VectorXd ordered_values(dim);
    Matrix ordered_vectors(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      const int j = perm[std::size_t(i)];
      ordered_values[i] = values[j];
      ordered_vectors.col(i) = vectors.col(j);
      const Complex z = prev.col(i).dot(ordered_vectors.col(i));
      if (std::abs(z) > 0.0) {
        ordered_vectors.col(i) *= std::conj(z) / std::abs(z);
      }
    }
    frame.energies.push_back(std::move(ordered_values));
    frame.transforms.push_back(std::move(ordered_vectors));
  }

  frame.couplings.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t kp = std::min(k + 1, n - 1);
    const std::size_t km = k == 0 ? 0 : k - 1;
    const Matrix dT =
        (frame.transforms[kp] - frame.transforms[km]) / (times[kp] - times[km]);
    Matrix coupling = frame.transforms[k].adjoint() * dT;
    coupling = 0.5 * (coupling - coupling.adjoint()).eval();
    frame.couplings.push_back(std::move(coupling));
  }
  return frame;
}

std::vector<Eigen::MatrixXd> bare_weights(const DressedFrame& frame) {
  std::vector<Eigen::MatrixXd> weights;
  weights.reserve(frame.size());
  for (const Matrix& t : frame.transforms) {
    weights.push_back(t.cwiseAbs2());
  }
  return weights;
}

Trajectory propagate_dressed(const DressedFrame& frame, const State& initial,
                             double tolerance) {
  check_grid(frame.times);
  if (initial.size() != frame.dim()) {
    throw std::invalid_argument("initial state dimension mismatch");
  }
  if (std::abs(initial.squaredNorm() - 1.0) > 1e-8) {
    throw std::invalid_argument("initial state is not normalized");
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be > 0");
  }

  const std::vector<double>& times = frame.times;
  const std::size_t n = times.size();
  double max_spacing = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    max_spacing = std::max(max_spacing, times[k] - times[k - 1]);
  }

  // lambda(t) and K(t) by linear interpolation between frame samples.
  std::size_t hint = 0;
  const auto rhs = [&](double t, const State& y, State& dydt) {
    if (t < times[hint] || (hint + 1 < n && t > times[hint + 1])) {
      const auto it = std::upper_bound(times.begin(), times.end(), t);
      hint = std::size_t(
          std::clamp<std::ptrdiff_t>(it - times.begin() - 1, 0,
                                     std::ptrdiff_t(n) - 2));
    }
    const std::size_t k = hint;
    const double theta =
        std::clamp((t - times[k]) / (times[k + 1] - times[k]), 0.0, 1.0);
    const Eigen::VectorXd lambda =
        (1.0 - theta) * frame.energies[k] + theta * frame.energies[k + 1];
    const Matrix coupling =
        (1.0 - theta) * frame.couplings[k] + theta * frame.couplings[k + 1];
    dydt.noalias() = coupling * y;
    dydt = kMinusI * lambda.cast<Complex>().cwiseProduct(y) - dydt;
  };

  const State cd0 = frame.transforms.front().adjoint() * initial;
  Trajectory traj;
  traj.times = times;
  traj.states = detail::integrate_sampled(rhs, cd0, times.front(),
                                          times.back(), tolerance, tolerance,
                                          max_spacing, times);
  traj.populations.reserve(traj.states.size());
  for (const State& s : traj.states) {
    traj.populations.push_back(s.cwiseAbs2());
  }
  return traj;
}

std::vector<Eigen::VectorXd> to_bare_populations(const DressedFrame& frame,
                                                 const Trajectory& dressed) {
  if (dressed.size() != frame.size()) {
    throw std::invalid_argument("trajectory does not match the frame grid");
  }
  std::vector<Eigen::VectorXd> pops;
  pops.reserve(frame.size());
  for (std::size_t k = 0; k < frame.size(); ++k) {
    pops.push_back((frame.transforms[k] * dressed.states[k]).cwiseAbs2());
  }
  return pops;
}

std::optional<ActiveSubset> active_subset(const DressedFrame& frame,
                                          int initial_bare,
                                          double threshold_factor) {
  const PairScan scan = scan_pair(frame, initial_bare);
  const Eigen::MatrixXd peak = peak_couplings(frame);
  const double median = off_pair_median(peak, scan.host, scan.partner);
  const double threshold = std::max(threshold_factor * median, 1e-9);
  if (scan.peak_coupling <= threshold) {
    return std::nullopt;
  }
  ActiveSubset subset;
  subset.host = scan.host;
  subset.partner = scan.partner;
  subset.crossing_time = scan.crossing_time;
  subset.min_gap = scan.min_gap;
  subset.peak_coupling = scan.peak_coupling;
  return subset;
}

AdiabaticityReport adiabaticity_report(const PulseParams& pulse,
                                       const AtomSystem& atom,
                                       const DressedFrame& frame) {
  validate(pulse);
  validate(atom);

  AdiabaticityReport report;
  report.sweep_value = std::abs(pulse.chirp_rate) * tau0(pulse);
  report.sweep_bound = atom.omega21;
  report.condition_sweep = report.sweep_value > report.sweep_bound;
  report.lz_value = std::abs(pulse.chirp_rate);
  report.lz_bound = pulse.peak_rabi * pulse.peak_rabi;
  report.condition_lz = report.lz_value < report.lz_bound;

  const PairScan scan = scan_pair(frame, 0);
  report.host = scan.host;
  report.partner = scan.partner;
  report.crossing_time = scan.crossing_time;
  report.min_gap = scan.min_gap;
  report.has_active_subset = active_subset(frame, 0).has_value();

  double ratio = 0.0;
  for (std::size_t k = 0; k < frame.size(); ++k) {
    const double gap = std::max(
        std::abs(frame.energies[k][scan.host] - frame.energies[k][scan.partner]),
        1e-30);
    const double coupling = std::abs(frame.couplings[k](scan.host, scan.partner));
    ratio = std::max(ratio, coupling / (2.0 * std::numbers::pi * gap));
  }
  report.coupling_ratio = ratio;
  return report;
}

}  // namespace chirplab
