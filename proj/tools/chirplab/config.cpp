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

#include "config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace chirplab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& value, int line,
                    const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) {
      fail(line, key + ": trailing characters after number");
    }
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, key + ": expected a number, got '" + value + "'");
  }
}

int parse_int(const std::string& value, int line, const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) {
      fail(line, key + ": trailing characters after integer");
    }
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, key + ": expected an integer, got '" + value + "'");
  }
}

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

struct AtomInput {
  bool preset_seen = false;
  bool custom_seen = false;
};

void apply_key(RunConfig& cfg, AtomInput& atom_input,
               const std::string& section, const std::string& key,
               const std::string& value, int line) {
  if (section == "pulse") {
    if (key == "peak_rabi") cfg.pulse.peak_rabi = parse_double(value, line, key);
    else if (key == "fwhm") cfg.pulse.fwhm = parse_double(value, line, key);
    else if (key == "chirp_rate") cfg.pulse.chirp_rate = parse_double(value, line, key);
    else if (key == "detuning") cfg.pulse.detuning = parse_double(value, line, key);
    else if (key == "center") cfg.pulse.center = parse_double(value, line, key);
    else fail(line, "unknown key '" + key + "' in [pulse]");
    return;
  }
  if (section == "atom") {
    if (key == "preset") {
      atom_input.preset_seen = true;
      if (value != "rb85-d1") fail(line, "unknown preset '" + value + "'");
      cfg.preset = value;
      cfg.atom = rb85_d1_preset();
    } else if (key == "omega21") {
      atom_input.custom_seen = true;
      cfg.atom.omega21 = parse_double(value, line, key);
    } else if (key == "omega43") {
      atom_input.custom_seen = true;
      cfg.atom.omega43 = parse_double(value, line, key);
    } else if (key == "label1" || key == "label2" || key == "label3" ||
               key == "label4") {
      cfg.atom.labels[std::size_t(key[5] - '1')] = value;
    } else {
      fail(line, "unknown key '" + key + "' in [atom]");
    }
    return;
  }
  if (section == "settings") {
    if (key == "model") {
      if (value == "four") cfg.model = ModelKind::four_level;
      else if (value == "three") cfg.model = ModelKind::three_level;
      else fail(line, "model must be 'four' or 'three'");
    } else if (key == "t_start") cfg.t_start = parse_double(value, line, key);
    else if (key == "t_end") cfg.t_end = parse_double(value, line, key);
    else if (key == "max_step") cfg.max_step = parse_double(value, line, key);
    else if (key == "tolerance") cfg.tolerance = parse_double(value, line, key);
    else if (key == "record_stride") cfg.record_stride = parse_int(value, line, key);
    else if (key == "threads") cfg.threads = parse_int(value, line, key);
    else fail(line, "unknown key '" + key + "' in [settings]");
    return;
  }
  if (section == "output") {
    if (key == "dir") cfg.out_dir = value;
    else if (key == "format") {
      if (value != "csv") fail(line, "unsupported format '" + value + "'");
      cfg.format = value;
    } else fail(line, "unknown key '" + key + "' in [output]");
    return;
  }
  if (section == "sweep") {
    if (key == "fwhm_min") cfg.sweep.fwhm_min = parse_double(value, line, key);
    else if (key == "fwhm_max") cfg.sweep.fwhm_max = parse_double(value, line, key);
    else if (key == "fwhm_count") cfg.sweep.fwhm_count = parse_int(value, line, key);
    else if (key == "chirp_min") cfg.sweep.chirp_min = parse_double(value, line, key);
    else if (key == "chirp_max") cfg.sweep.chirp_max = parse_double(value, line, key);
    else if (key == "chirp_count") cfg.sweep.chirp_count = parse_int(value, line, key);
    else fail(line, "unknown key '" + key + "' in [sweep]");
    return;
  }
  fail(line, "unknown section [" + section + "]");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  AtomInput atom_input;

  std::istringstream stream(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "pulse" && section != "atom" && section != "settings" &&
          section != "output" && section != "sweep") {
        fail(line_no, "unknown section '" + section + "'");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (section.empty()) fail(line_no, "key outside any section");
    apply_key(cfg, atom_input, section, key, value, line_no);
  }

  if (atom_input.preset_seen && atom_input.custom_seen) {
    throw ConfigError(
        "config: choose either an atom preset or explicit omega21/omega43");
  }
  if (atom_input.custom_seen) cfg.preset.clear();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string dump_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "# chirplab configuration\n";
  out << "[pulse]\n";
  out << "peak_rabi = " << fmt(cfg.pulse.peak_rabi) << "\n";
  out << "fwhm = " << fmt(cfg.pulse.fwhm) << "\n";
  out << "chirp_rate = " << fmt(cfg.pulse.chirp_rate) << "\n";
  out << "detuning = " << fmt(cfg.pulse.detuning) << "\n";
  out << "center = " << fmt(cfg.pulse.center) << "\n";
  out << "[atom]\n";
  if (!cfg.preset.empty()) {
    out << "preset = " << cfg.preset << "\n";
  } else {
    out << "omega21 = " << fmt(cfg.atom.omega21) << "\n";
    out << "omega43 = " << fmt(cfg.atom.omega43) << "\n";
    for (std::size_t i = 0; i < cfg.atom.labels.size(); ++i) {
      out << "label" << i + 1 << " = " << cfg.atom.labels[i] << "\n";
    }
  }
  out << "[settings]\n";
  out << "model = " << model_name(cfg.model) << "\n";
  if (cfg.t_start) out << "t_start = " << fmt(*cfg.t_start) << "\n";
  if (cfg.t_end) out << "t_end = " << fmt(*cfg.t_end) << "\n";
  if (cfg.max_step) out << "max_step = " << fmt(*cfg.max_step) << "\n";
  if (cfg.tolerance) out << "tolerance = " << fmt(*cfg.tolerance) << "\n";
  if (cfg.record_stride) out << "record_stride = " << *cfg.record_stride << "\n";
  out << "threads = " << cfg.threads << "\n";
  out << "[output]\n";
  if (!cfg.out_dir.empty()) out << "dir = " << cfg.out_dir << "\n";
  out << "format = " << cfg.format << "\n";
  out << "[sweep]\n";
  out << "fwhm_min = " << fmt(cfg.sweep.fwhm_min) << "\n";
  out << "fwhm_max = " << fmt(cfg.sweep.fwhm_max) << "\n";
  out << "fwhm_count = " << cfg.sweep.fwhm_count << "\n";
  out << "chirp_min = " << fmt(cfg.sweep.chirp_min) << "\n";
  out << "chirp_max = " << fmt(cfg.sweep.chirp_max) << "\n";
  out << "chirp_count = " << cfg.sweep.chirp_count << "\n";
  return out.str();
}

const char* model_name(ModelKind model) {
  return model == ModelKind::four_level ? "four" : "three";
}

}  // namespace chirplab::cli
