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

#include "commands.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "chirplab/dressed.hpp"
#include "chirplab/lambda_reduction.hpp"
#include "chirplab/propagator.hpp"
#include "chirplab/sweep.hpp"
#include "csv.hpp"

namespace chirplab::cli {

namespace {

int dimension(const RunConfig& cfg) {
  return cfg.model == ModelKind::four_level ? 4 : 3;
}

HBuilder make_builder(const RunConfig& cfg) {
  const PulseParams pulse = cfg.pulse;
  const AtomSystem atom = cfg.atom;
  if (cfg.model == ModelKind::four_level) {
    return [pulse, atom](double t) { return hamiltonian4(t, pulse, atom); };
  }
  // Raises the detuning domain error early instead of mid-integration.
  hamiltonian3(pulse.center, pulse, atom);
  return [pulse, atom](double t) { return hamiltonian3(t, pulse, atom); };
}

IntegrationSettings resolve_settings(const RunConfig& cfg) {
  IntegrationSettings s = default_window(cfg.pulse);
  if (cfg.t_start) s.t_start = *cfg.t_start;
  if (cfg.t_end) s.t_end = *cfg.t_end;
  if (cfg.max_step) s.max_step = *cfg.max_step;
  if (cfg.tolerance) s.tolerance = *cfg.tolerance;
  if (cfg.record_stride) s.record_stride = *cfg.record_stride;
  validate(s);
  return s;
}

std::filesystem::path resolve_out_dir(const RunConfig& cfg) {
  const std::filesystem::path dir =
      cfg.out_dir.empty() ? "." : cfg.out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw ConfigError("cannot create output directory '" + dir.string() +
                      "': " + ec.message());
  }
  return dir;
}

State ground_state(int dim) {
  State s = State::Zero(dim);
  s[0] = 1.0;
  return s;
}

std::string roman(int index) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI"};
  return index >= 0 && index < 6 ? names[index] : std::to_string(index + 1);
}

std::string trajectory_csv(const Trajectory& traj) {
  const int dim = int(traj.states.front().size());
  std::ostringstream out;
  out << "# schema: chirplab.trajectory.v1\n";
  out << "time_ns";
  for (int i = 1; i <= dim; ++i) out << ",re_c" << i << ",im_c" << i;
  for (int i = 1; i <= dim; ++i) out << ",p" << i;
  out << ",norm\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out << sci(traj.times[k]);
    for (int i = 0; i < dim; ++i) {
      out << ',' << sci(traj.states[k][i].real()) << ','
          << sci(traj.states[k][i].imag());
    }
    for (int i = 0; i < dim; ++i) out << ',' << sci(traj.populations[k][i]);
    out << ',' << sci(traj.populations[k].sum()) << "\n";
  }
  return out.str();
}

std::string populations_plot(int dim) {
  std::ostringstream out;
  out << "# gnuplot script: bare-state populations against time\n";
  out << "set datafile separator ','\n";
  out << "set xlabel 'time (ns)'\n";
  out << "set ylabel 'population'\n";
  out << "set yrange [-0.02:1.05]\n";
  out << "set key outside\n";
  out << "plot";
  for (int i = 1; i <= dim; ++i) {
    const int column = 1 + 2 * dim + i;
    out << (i == 1 ? " " : ", ") << "'trajectory.csv' using 1:" << column
        << " with lines title 'P" << i << "'";
  }
  out << "\n";
  return out.str();
}

}  // namespace

void cmd_propagate(const RunConfig& cfg) {
  validate(cfg.pulse);
  validate(cfg.atom);
  const IntegrationSettings settings = resolve_settings(cfg);
  const int dim = dimension(cfg);

  const Trajectory traj =
      propagate(make_builder(cfg), ground_state(dim), settings);

  const auto dir = resolve_out_dir(cfg);
  write_file_atomic(dir / "trajectory.csv", trajectory_csv(traj));
  write_file_atomic(dir / "populations.plt", populations_plot(dim));
}

void cmd_dressed(const RunConfig& cfg) {
  validate(cfg.pulse);
  validate(cfg.atom);
  const IntegrationSettings settings = resolve_settings(cfg);
  const int dim = dimension(cfg);
  const HBuilder builder = make_builder(cfg);

  constexpr std::size_t kSamples = 2001;
  std::vector<double> grid(kSamples);
  const double span = settings.t_end - settings.t_start;
  for (std::size_t i = 0; i < kSamples; ++i) {
    grid[i] = settings.t_start + span * double(i) / double(kSamples - 1);
  }
  grid.back() = settings.t_end;

  const DressedFrame frame = dressed_frame(builder, grid);
  const std::vector<Eigen::MatrixXd> weights = bare_weights(frame);
  const AdiabaticityReport report =
      adiabaticity_report(cfg.pulse, cfg.atom, frame);

  std::ostringstream energies;
  energies << "# schema: chirplab.dressed_energies.v1\n";
  energies << "time_ns";
  for (int i = 1; i <= dim; ++i) energies << ",lambda" << i;
  for (int i = 1; i <= dim; ++i) energies << ",bare" << i;
  energies << "\n";
  for (std::size_t k = 0; k < frame.size(); ++k) {
    energies << sci(frame.times[k]);
    for (int i = 0; i < dim; ++i) energies << ',' << sci(frame.energies[k][i]);
    const Matrix h = builder(frame.times[k]);
    for (int i = 0; i < dim; ++i) energies << ',' << sci(h(i, i).real());
    energies << "\n";
  }

  std::ostringstream weights_csv;
  weights_csv << "# schema: chirplab.bare_weights.v1\n";
  weights_csv << "time_ns";
  for (int i = 1; i <= dim; ++i) {
    for (int j = 1; j <= dim; ++j) weights_csv << ",w" << i << j;
  }
  weights_csv << "\n";
  for (std::size_t k = 0; k < frame.size(); ++k) {
    weights_csv << sci(frame.times[k]);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) weights_csv << ',' << sci(weights[k](i, j));
    }
    weights_csv << "\n";
  }

  std::ostringstream coupling;
  coupling << "# schema: chirplab.coupling.v1\n";
  coupling << "time_ns";
  for (int i = 1; i <= dim; ++i) {
    for (int j = i + 1; j <= dim; ++j) coupling << ",k" << i << j;
  }
  coupling << "\n";
  for (std::size_t k = 0; k < frame.size(); ++k) {
    coupling << sci(frame.times[k]);
    for (int i = 0; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        coupling << ',' << sci(std::abs(frame.couplings[k](i, j)));
      }
    }
    coupling << "\n";
  }

  std::ostringstream txt;
  txt << "adiabaticity report\n";
  txt << "pulse: peak_rabi = " << num(cfg.pulse.peak_rabi)
      << " GHz, fwhm = " << num(cfg.pulse.fwhm)
      << " ns, chirp_rate = " << num(cfg.pulse.chirp_rate)
      << " GHz/ns, detuning = " << num(cfg.pulse.detuning)
      << " GHz, center = " << num(cfg.pulse.center) << " ns\n";
  txt << "tau0 = " << num(tau0(cfg.pulse)) << " ns\n";
  txt << "sweep condition: |chirp|*tau0 = " << num(report.sweep_value)
      << " GHz vs omega21 = " << num(report.sweep_bound) << " GHz -> "
      << (report.condition_sweep ? "satisfied" : "not satisfied") << "\n";
  txt << "landau-zener condition: |chirp| = " << num(report.lz_value)
      << " GHz/ns vs peak_rabi^2 = " << num(report.lz_bound) << " GHz^2 -> "
      << (report.condition_lz ? "satisfied" : "not satisfied");
  if (report.lz_value > 0.0) {
    txt << " (ratio peak_rabi^2/|chirp| = "
        << num(report.lz_bound / report.lz_value) << ")";
  }
  txt << "\n";
  txt << "dressed labels follow ascending energy at the first sample\n";
  if (report.has_active_subset) {
    txt << "active subset: dressed pair (" << roman(report.host) << ", "
        << roman(report.partner) << "); " << roman(report.host)
        << " hosts the initial bare state\n";
  } else {
    txt << "no active subset above threshold; best-effort pair ("
        << roman(report.host) << ", " << roman(report.partner) << ")\n";
  }
  txt << "min gap = " << num(report.min_gap) << " rad/ns at t = "
      << num(report.crossing_time) << " ns\n";
  txt << "coupling ratio max|K|/(2 pi gap) = " << num(report.coupling_ratio)
      << " (K in 1/ns, gap in rad/ns)\n";

  const auto dir = resolve_out_dir(cfg);
  write_file_atomic(dir / "dressed_energies.csv", energies.str());
  write_file_atomic(dir / "bare_weights.csv", weights_csv.str());
  write_file_atomic(dir / "coupling.csv", coupling.str());
  write_file_atomic(dir / "adiabaticity.txt", txt.str());
}

void cmd_sweep(const RunConfig& cfg) {
  const SweepConfig& sc = cfg.sweep;
  if (sc.fwhm_count < 1 || sc.chirp_count < 1) {
    throw ConfigError("sweep: axis counts must be >= 1");
  }

  const auto linspace = [](double lo, double hi, int count) {
    std::vector<double> axis(static_cast<std::size_t>(count), 0.0);
    if (count == 1) {
      axis[0] = lo;
      return axis;
    }
    for (int i = 0; i < count; ++i) {
      axis[std::size_t(i)] = lo + (hi - lo) * double(i) / double(count - 1);
    }
    axis.back() = hi;
    return axis;
  };

  SweepSpec spec;
  spec.fwhm_axis = linspace(sc.fwhm_min, sc.fwhm_max, sc.fwhm_count);
  spec.chirp_axis = linspace(sc.chirp_min, sc.chirp_max, sc.chirp_count);
  spec.peak_rabi = cfg.pulse.peak_rabi;
  spec.detuning = cfg.pulse.detuning;
  spec.atom = cfg.atom;
  spec.model = cfg.model;
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("sweep: ") + e.what());
  }

  const SweepResult result = run_sweep(spec, cfg.threads);
  const int dim = dimension(cfg);
  const std::size_t n_chirp = spec.chirp_axis.size();

  std::vector<std::string> grids;
  for (int state = 0; state < dim; ++state) {
    std::ostringstream out;
    out << "# schema: chirplab.sweep.v1\n";
    out << "fwhm_ns\\chirp_GHz_per_ns";
    for (double c : spec.chirp_axis) out << ',' << sci(c);
    out << "\n";
    for (std::size_t i = 0; i < spec.fwhm_axis.size(); ++i) {
      out << sci(spec.fwhm_axis[i]);
      for (std::size_t j = 0; j < n_chirp; ++j) {
        out << ',' << sci(result.at(i, j).final_pops[state]);
      }
      out << "\n";
    }
    grids.push_back(out.str());
  }

  std::ostringstream flags;
  flags << "# schema: chirplab.flags.v1\n";
  flags << "fwhm_ns,chirp_GHz_per_ns,condition_sweep,condition_lz\n";
  std::ostringstream failures;
  failures << "# schema: chirplab.failures.v1\n";
  failures << "fwhm_ns,chirp_GHz_per_ns,message\n";
  for (std::size_t i = 0; i < spec.fwhm_axis.size(); ++i) {
    for (std::size_t j = 0; j < n_chirp; ++j) {
      const SweepCell& cell = result.at(i, j);
      flags << sci(spec.fwhm_axis[i]) << ',' << sci(spec.chirp_axis[j]) << ','
            << (cell.condition_sweep ? 1 : 0) << ','
            << (cell.condition_lz ? 1 : 0) << "\n";
      if (cell.failed) {
        failures << sci(spec.fwhm_axis[i]) << ',' << sci(spec.chirp_axis[j])
                 << ',' << csv_quote(cell.error) << "\n";
      }
    }
  }

  const auto dir = resolve_out_dir(cfg);
  for (int state = 0; state < dim; ++state) {
    write_file_atomic(dir / ("sweep_p" + std::to_string(state + 1) + ".csv"),
                      grids[std::size_t(state)]);
  }
  write_file_atomic(dir / "flags.csv", flags.str());
  write_file_atomic(dir / "failures.csv", failures.str());
}

void cmd_compare(const RunConfig& cfg) {
  validate(cfg.pulse);
  validate(cfg.atom);
  const ReductionReport report = compare_models(cfg.pulse, cfg.atom);

  std::ostringstream txt;
  txt << "lambda reduction report\n";
  txt << "pulse: peak_rabi = " << num(cfg.pulse.peak_rabi)
      << " GHz, fwhm = " << num(cfg.pulse.fwhm)
      << " ns, chirp_rate = " << num(cfg.pulse.chirp_rate) << " GHz/ns\n";
  txt << "validity (chirp): |chirp|*tau0 = " << num(report.chirp_value)
      << " GHz vs omega43 = " << num(report.chirp_bound) << " GHz -> "
      << (report.validity_chirp ? "satisfied" : "not satisfied") << "\n";
  txt << "validity (rabi): peak_rabi = " << num(report.rabi_value)
      << " GHz vs omega43 = " << num(report.rabi_bound) << " GHz -> "
      << (report.validity_rabi ? "satisfied" : "not satisfied") << "\n";
  txt << "a- drift = " << num(report.aminus_drift) << "\n";
  txt << "population gap (max over matched samples of |dP1|, |dP2|, "
         "|P3+P4 - P3'|) = "
      << num(report.population_gap) << "\n";
  txt << "qualitative match (gap <= 0.05): "
      << (report.qualitative_match ? "yes" : "no") << "\n";
  txt << "final populations, four-level:";
  for (int i = 0; i < 4; ++i) {
    txt << " p" << i + 1 << " = " << num(report.final_four[i]);
  }
  txt << "\n";
  txt << "final populations, three-level:";
  for (int i = 0; i < 3; ++i) {
    txt << " p" << i + 1 << " = " << num(report.final_three[i]);
  }
  txt << "\n";
  txt << "matched samples (every 10th):\n";
  txt << "time_ns p1_4 p2_4 pexc_4 p1_3 p2_3 p3_3\n";
  for (std::size_t k = 0; k < report.times.size(); k += 10) {
    const Eigen::VectorXd& p4 = report.pops_four[k];
    const Eigen::VectorXd& p3 = report.pops_three[k];
    txt << num(report.times[k]) << ' ' << num(p4[0]) << ' ' << num(p4[1])
        << ' ' << num(p4[2] + p4[3]) << ' ' << num(p3[0]) << ' ' << num(p3[1])
        << ' ' << num(p3[2]) << "\n";
  }

  const auto dir = resolve_out_dir(cfg);
  write_file_atomic(dir / "reduction.txt", txt.str());
}

}  // namespace chirplab::cli
