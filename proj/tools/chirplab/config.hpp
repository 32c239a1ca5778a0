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

#include "chirplab/model.hpp"
#include "chirplab/sweep.hpp"

// Flat key-value configuration with sections [pulse], [atom], [settings],
// [output], [sweep]. Hand-editable, diff-friendly; --dump-config emits a
// canonical form that re-parses to an identical RunConfig.

namespace chirplab::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  double fwhm_min = 0.5;   // ns
  double fwhm_max = 4.5;   // ns
  int fwhm_count = 64;
  double chirp_min = -4.0; // GHz/ns
  double chirp_max = 0.0;  // GHz/ns
  int chirp_count = 64;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct RunConfig {
  PulseParams pulse{3.035, 2.995, -2.947, 0.0, 0.0};
  std::string preset = "rb85-d1";  // empty when the atom is given explicitly
  AtomSystem atom = rb85_d1_preset();
  ModelKind model = ModelKind::four_level;
  std::optional<double> t_start;
  std::optional<double> t_end;
  std::optional<double> max_step;
  std::optional<double> tolerance;
  std::optional<int> record_stride;
  int threads = 1;
  std::string out_dir;  // empty selects CHIRPLAB_OUT, then "."
  std::string format = "csv";
  SweepConfig sweep;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Parse configuration text on top of the defaults. Unknown sections or keys,
// malformed values, and preset/explicit-atom conflicts raise ConfigError
// with the offending line number.
RunConfig parse_config(const std::string& text);

// Read and parse a configuration file; ConfigError on I/O failure.
RunConfig load_config(const std::string& path);

// Canonical text form; parse_config(dump_config(c)) == c.
std::string dump_config(const RunConfig& config);

const char* model_name(ModelKind model);

}  // namespace chirplab::cli
