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

#include <filesystem>
#include <string>

namespace chirplab::cli {

// Scientific notation with 17 significant digits, the regression-stable
// interchange format for all numeric CSV data.
std::string sci(double v);

// General format with up to 6 significant digits, for human-readable reports.
std::string num(double v);

// Quote a CSV field when it contains a comma, quote, or newline.
std::string csv_quote(const std::string& field);

// Write via a temporary file in the same directory and rename on success, so
// failed runs never leave partial output behind.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace chirplab::cli
