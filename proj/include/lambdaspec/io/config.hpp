// Copyright 2026 The lambdaspec Authors
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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lambdaspec/model/params.hpp"

namespace lambdaspec {

/// Malformed or out-of-range configuration. `field` is the dotted JSON path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridConfig {
  double omega_min = -3.0;
  double omega_max = 3.0;
  int points = 1201;
  /// Add 241-point windows around both sidebands, which are usually far
  /// narrower than the grid spacing.
  bool refine_sidebands = true;
};

struct OracleConfig {
  int n_max = 8;
  int quadrature_nodes = 16;
};

/// Optional published value to compare against (reported, never enforced).
struct ReferenceValue {
  double n_bar = 0.0;
  std::string source;
};

struct RunConfig {
  std::string name;  ///< label used in output files; defaults to the config stem
  ModelParams params;
  bool n_max_explicit = false;  ///< otherwise chosen from the estimated <n>
  GridConfig grid;
  OracleConfig oracle;
  std::optional<ReferenceValue> reference;
};

/// Throws ConfigError on unknown keys, wrong types or invalid values.
RunConfig parse_config_text(std::string_view text, std::string_view default_name = "run");

/// Throws IoError when the file cannot be read, ConfigError otherwise.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace lambdaspec
