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

#ifndef CHIRPLAB_TOOLS_APP_HPP_
#define CHIRPLAB_TOOLS_APP_HPP_

namespace chirplab::cli {

// Parses argv, runs the selected subcommand, and maps failure modes to
// exit codes: 0 success, 2 configuration or usage error, 3 integration
// failure, 4 dressed-state tracking failure, 1 anything unexpected.
int run(int argc, const char* const* argv);

}  // namespace chirplab::cli

#endif  // CHIRPLAB_TOOLS_APP_HPP_
