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

#include "app.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "chirplab/dressed.hpp"
#include "chirplab/propagator.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace chirplab::cli {

namespace {

RunConfig assemble(const std::string& config_path, const std::string& out_dir,
                   const std::string& preset, const std::string& model,
                   int threads, bool have_out, bool have_preset,
                   bool have_model, bool have_threads) {
  RunConfig cfg;
  if (!config_path.empty()) cfg = load_config(config_path);

  if (have_preset) {
    if (preset != "rb85-d1") {
      throw ConfigError("unknown preset '" + preset + "'");
    }
    cfg.preset = preset;
    cfg.atom = rb85_d1_preset();
  }
  if (have_model) {
    cfg.model =
        model == "three" ? ModelKind::three_level : ModelKind::four_level;
  }
  if (have_threads) {
    if (threads < 0) throw ConfigError("--threads must be >= 0");
    cfg.threads = threads;
  }

  // Output directory precedence: flag, then config, then environment.
  if (have_out) {
    cfg.out_dir = out_dir;
  } else if (cfg.out_dir.empty()) {
    if (const char* env = std::getenv("CHIRPLAB_OUT")) cfg.out_dir = env;
  }
  return cfg;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"chirped-pulse population dynamics in multilevel atoms"};
  app.set_version_flag("--version", "chirplab 0.1.0");
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_dir;
  std::string preset;
  std::string model;
  int threads = 1;
  bool dump = false;

  app.add_option("--config", config_path, "configuration file to load")
      ->option_text("PATH");
  auto* out_opt =
      app.add_option("--out", out_dir, "output directory")->option_text("DIR");
  auto* preset_opt =
      app.add_option("--preset", preset, "atomic constants preset")
          ->option_text("NAME");
  auto* model_opt = app.add_option("--model", model, "level-scheme selector")
                        ->check(CLI::IsMember({"three", "four"}));
  auto* threads_opt =
      app.add_option("--threads", threads, "worker threads for sweeps")
          ->option_text("N");
  app.add_flag("--dump-config", dump,
               "print the resolved configuration and exit");

  CLI::App* sub_propagate =
      app.add_subcommand("propagate", "integrate the bare-state dynamics");
  CLI::App* sub_dressed =
      app.add_subcommand("dressed", "dressed-state analysis and report");
  CLI::App* sub_sweep =
      app.add_subcommand("sweep", "parameter grid over fwhm and chirp");
  CLI::App* sub_compare =
      app.add_subcommand("compare", "four-level versus three-level reduction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "chirplab: " << e.what() << "\n";
    return 2;
  }

  try {
    const RunConfig cfg = assemble(
        config_path, out_dir, preset, model, threads, out_opt->count() > 0,
        preset_opt->count() > 0, model_opt->count() > 0,
        threads_opt->count() > 0);

    if (dump) {
      std::cout << dump_config(cfg);
      return 0;
    }
    if (sub_propagate->parsed()) {
      cmd_propagate(cfg);
    } else if (sub_dressed->parsed()) {
      cmd_dressed(cfg);
    } else if (sub_sweep->parsed()) {
      cmd_sweep(cfg);
    } else if (sub_compare->parsed()) {
      cmd_compare(cfg);
    } else {
      std::cerr << "chirplab: no subcommand given (see --help)\n";
      return 2;
    }
    return 0;
  } catch (const IntegrationError& e) {
    std::cerr << "chirplab: integration failed: " << e.what() << "\n";
    return 3;
  } catch (const TrackingError& e) {
    std::cerr << "chirplab: dressed-state tracking failed: " << e.what()
              << "\n";
    return 4;
  } catch (const ConfigError& e) {
    std::cerr << "chirplab: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "chirplab: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "chirplab: unexpected error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace chirplab::cli
