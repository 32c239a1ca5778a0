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

#include "config.hpp"

// Each command computes everything first, then writes its output files into
// the resolved output directory. Errors surface as exceptions; exit-code
// mapping happens in the application driver.

namespace chirplab::cli {

void cmd_propagate(const RunConfig& config);
void cmd_dressed(const RunConfig& config);
void cmd_sweep(const RunConfig& config);
void cmd_compare(const RunConfig& config);

}  // namespace chirplab::cli
