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

#include "csv.hpp"

#include <cstdio>
#include <fstream>

#include "config.hpp"

namespace chirplab::cli {

std::string sci(double v) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.16e", v);
  return buffer;
}

std::string num(double v) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ConfigError("cannot write to '" + tmp.string() + "'");
    }
    out << content;
    out.flush();
    if (!out) {
      throw ConfigError("write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw ConfigError("cannot move '" + tmp.string() + "' into place: " +
                      ec.message());
  }
}

}  // namespace chirplab::cli
