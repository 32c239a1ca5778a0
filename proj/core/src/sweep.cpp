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

#include "chirplab/sweep.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "chirplab/propagator.hpp"

namespace chirplab {

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) {
    throw std::invalid_argument(std::string(name) + " axis is empty");
  }
  const bool ascending = axis.size() < 2 || axis[1] > axis[0];
  for (std::size_t i = 1; i < axis.size(); ++i) {
    const bool ok = ascending ? axis[i] > axis[i - 1] : axis[i] < axis[i - 1];
    if (!ok) {
      throw std::invalid_argument(std::string(name) +
                                  " axis must be strictly monotone");
    }
  }
}

SweepCell evaluate_cell(const SweepSpec& spec, double fwhm, double chirp) {
  PulseParams pulse;
  pulse.peak_rabi = spec.peak_rabi;
  pulse.fwhm = fwhm;
  pulse.chirp_rate = chirp;
  pulse.detuning = spec.detuning;
  pulse.center = 0.0;

  SweepCell cell;
  cell.condition_sweep = std::abs(chirp) * tau0(pulse) > spec.atom.omega21;
  cell.condition_lz = std::abs(chirp) < spec.peak_rabi * spec.peak_rabi;

  const int dim = spec.model == ModelKind::four_level ? 4 : 3;
  try {
    State initial = State::Zero(dim);
    initial[0] = 1.0;
    const AtomSystem atom = spec.atom;
    const auto builder = [&](double t) {
      return spec.model == ModelKind::four_level
                 ? hamiltonian4(t, pulse, atom)
                 : hamiltonian3(t, pulse, atom);
    };
    cell.final_pops =
        final_populations(propagate(builder, initial, default_window(pulse)));
  } catch (const std::exception& e) {
    cell.failed = true;
    cell.error = e.what();
    cell.final_pops = Eigen::VectorXd::Constant(
        dim, std::numeric_limits<double>::quiet_NaN());
  }
  return cell;
}

}  // namespace

void validate(const SweepSpec& spec) {
  check_axis(spec.fwhm_axis, "fwhm");
  check_axis(spec.chirp_axis, "chirp");
  for (double f : spec.fwhm_axis) {
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw std::invalid_argument("fwhm axis values must be > 0");
    }
  }
  for (double c : spec.chirp_axis) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("chirp axis values must be finite");
    }
  }
  if (!(spec.peak_rabi >= 0.0) || !std::isfinite(spec.peak_rabi)) {
    throw std::invalid_argument("peak_rabi must be finite and >= 0");
  }
  if (!std::isfinite(spec.detuning)) {
    throw std::invalid_argument("detuning must be finite");
  }
  if (spec.model == ModelKind::three_level && spec.detuning != 0.0) {
    throw std::invalid_argument(
        "the three-level model requires zero detuning");
  }
  validate(spec.atom);
}

std::size_t SweepResult::n_failed() const {
  std::size_t count = 0;
  for (const SweepCell& cell : cells) {
    if (cell.failed) ++count;
  }
  return count;
}

SweepResult run_sweep(const SweepSpec& spec, int threads) {
  validate(spec);

  const std::size_t n_chirp = spec.chirp_axis.size();
  const std::size_t n_cells = spec.fwhm_axis.size() * n_chirp;

  SweepResult result;
  result.spec = spec;
  result.cells.resize(n_cells);

  unsigned workers = threads > 0 ? unsigned(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, unsigned(n_cells));

  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t idx = next.fetch_add(1); idx < n_cells;
         idx = next.fetch_add(1)) {
      const std::size_t i = idx / n_chirp;
      const std::size_t j = idx % n_chirp;
      result.cells[idx] =
          evaluate_cell(spec, spec.fwhm_axis[i], spec.chirp_axis[j]);
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers > 0 ? workers - 1 : 0);
  for (unsigned w = 1; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  worker();
  for (std::thread& t : pool) {
    t.join();
  }
  return result;
}

RegionMap classify_region(const SweepResult& result, double threshold) {
  if (!(threshold > 0.0) || !(threshold < 1.0)) {
    throw std::invalid_argument("threshold must lie in (0, 1)");
  }
  RegionMap map;
  map.inverted.resize(result.cells.size(), 0);

  std::size_t considered = 0;
  std::size_t matched = 0;
  for (std::size_t idx = 0; idx < result.cells.size(); ++idx) {
    const SweepCell& cell = result.cells[idx];
    if (cell.failed) continue;
    const bool inverted = cell.final_pops[1] >= threshold;
    map.inverted[idx] = inverted ? 1 : 0;
    const bool analytic = cell.condition_sweep && cell.condition_lz;
    ++considered;
    if (analytic == inverted) ++matched;
  }
  map.agreement =
      considered == 0 ? 0.0 : double(matched) / double(considered);
  return map;
}

}  // namespace chirplab
